#include "lbi/confirmation.hpp"

#include <stdexcept>

namespace lbi {

ConfirmationResult confirm(const Evidence2x2& ev) {
    const double tp = ev.p_pos_given_disease;
    const double fp = ev.p_pos_given_healthy;
    if (tp < 0.0 || tp > 1.0 || fp < 0.0 || fp > 1.0)
        throw std::invalid_argument("conditionals must be in [0,1]");
    if (tp == 0.0 && fp == 0.0)
        throw std::runtime_error("hypothesis never instantiated");

    ConfirmationResult result;
    if (fp <= tp) {
        result.b_prime = fp / tp;
        result.b_star = 1.0 - result.b_prime;
    } else {
        result.b_prime = tp / fp;
        result.b_star = -(1.0 - result.b_prime);
    }
    result.cl = bstar_to_cl(result.b_star);
    return result;
}

double cl_to_bstar(double cl) {
    if (cl < 0.0 || cl > 1.0) throw std::invalid_argument("cl must be in [0,1]");
    if (cl > 0.5) return (2.0 * cl - 1.0) / cl;
    return -(1.0 - 2.0 * cl) / (1.0 - cl);
}

double bstar_to_cl(double b) {
    if (b < -1.0 || b > 1.0) throw std::invalid_argument("b* must be in [-1,1]");
    if (b >= 0.0) return 1.0 / (2.0 - b);
    return (1.0 + b) / (2.0 + b);
}

}  // namespace lbi
