#ifndef LBI_INFORMATION_HPP
#define LBI_INFORMATION_HPP

#include <span>
#include <vector>

#include "lbi/probability.hpp"
#include "lbi/semantic_channel.hpp"

namespace lbi {

// All information quantities are reported in bits. Impossible observations
// yield an explicit -infinity value, never NaN.

/// Semantic mutual information with its entropy decomposition:
/// value = h_theta - h_theta_given_x.
struct InfoReport {
    double value = 0.0;
    double h_theta = 0.0;
    double h_theta_given_x = 0.0;
};

/// A conditional sampling distribution P(x|y_j) together with the number of
/// examples it was estimated from.
struct SamplingDistribution {
    Distribution dist;
    double count = 0.0;
};

/// Shannon entropy of a distribution, in bits.
double entropy(const Distribution& p);

/// Shannon mutual information I(X;Y) of a joint, in bits.
double shannon_mutual_information(const JointDistribution& joint);

/// Point semantic information I(x_i;θ_j) = log2[T(θ_j|x_i)/T(θ_j)].
double semantic_info_point(std::size_t x_index, const TruthFunction& t,
                           const Distribution& prior);

/// Same quantity for a parametric Gaussian truth function at an arbitrary
/// (not necessarily on-grid) x: log2[1/T(θ_j)] - (x-c)^2/(2d^2) log2(e),
/// with T(θ_j) taken over the grid.
double gaussian_semantic_info(double x, const GaussianTruthParams& params,
                              std::span<const double> grid,
                              const Distribution& prior);

/// Generalized KL information I(X;θ_j) = Σ_i P(x_i|y_j) log2[T(θ_j|x_i)/T(θ_j)].
/// Maximal, equal to KL(sampling ‖ prior), when the truth function matches
/// the sampling distribution.
double generalized_kl(const Distribution& sampling, const TruthFunction& t,
                      const Distribution& prior);

/// Semantic mutual information I(X;θ) = Σ_j P(y_j) I(X;θ_j), decomposed as
/// H(θ) - H(θ|X) with H(θ) = -Σ_j P(y_j) log2 T(θ_j).
InfoReport semantic_mutual_information(const JointDistribution& joint,
                                       const SemanticChannel& sc);

/// Σ_j N_j I(X;θ_j) over a count matrix; cross-checked internally against
/// the directly computed log normalized-likelihood product.
double log_likelihood_link(std::size_t m, std::size_t n,
                           const std::vector<double>& counts,
                           const SemanticChannel& sc, const Distribution& prior);

/// Search space for Gaussian truth-function fitting: an exhaustive coarse
/// grid over (center, width) followed by local refinement rounds at 10x
/// resolution around the incumbent. Ties resolve to the smallest center,
/// then the smallest width.
struct GridSearchSpec {
    double c_lo = 0.0, c_hi = 1.0;
    double d_lo = 0.01, d_hi = 1.0;
    std::size_t c_steps = 101;
    std::size_t d_steps = 101;
    int refine_rounds = 3;

    /// Default search space for a grid of representative values: centers
    /// span the grid range, widths span [range/100, range].
    static GridSearchSpec for_grid(std::span<const double> grid);
};

struct TruthFitResult {
    GaussianTruthParams params;
    double info_bits = 0.0;
};

/// Maximum-semantic-information fit of a Gaussian truth function to a
/// sampling distribution. Equivalent to maximum likelihood because the
/// prior does not change while θ_j is optimized.
TruthFitResult optimize_truth_params(const Distribution& sampling,
                                     const Distribution& prior,
                                     std::span<const double> grid,
                                     const GridSearchSpec& spec);

}  // namespace lbi

#endif
