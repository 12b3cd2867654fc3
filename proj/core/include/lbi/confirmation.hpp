#ifndef LBI_CONFIRMATION_HPP
#define LBI_CONFIRMATION_HPP

namespace lbi {

/// 2x2 evidence for the universal hypothesis "if test-positive then
/// diseased": the two conditionals of the positive label.
struct Evidence2x2 {
    double p_pos_given_disease = 0.0;  // P(y1|x1)
    double p_pos_given_healthy = 0.0;  // P(y1|x0)
};

struct ConfirmationResult {
    double b_prime = 0.0;  // optimized truth value of the counterexample
    double b_star = 0.0;   // confirmation measure, in [-1, 1]
    double cl = 0.5;       // confidence level, in [0, 1]
};

/// Confirmation measure b* from 2x2 evidence. Oriented so the output stays
/// in [-1, 1]: positive when positives dominate, negative when the
/// counterexample conditional dominates; antisymmetric under swapping the
/// roles of x0 and x1.
ConfirmationResult confirm(const Evidence2x2& ev);

/// Confidence level to b*: (2 CL - 1)/CL above 0.5, the sign-symmetric
/// branch -(1 - 2 CL)/(1 - CL) at or below. Monotone increasing with
/// b*(0) = -1, b*(0.5) = 0, b*(1) = 1.
double cl_to_bstar(double cl);

/// Exact inverse of cl_to_bstar.
double bstar_to_cl(double b);

}  // namespace lbi

#endif
