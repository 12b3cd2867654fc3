#ifndef LBI_MIXTURE_HPP
#define LBI_MIXTURE_HPP

#include <optional>
#include <span>
#include <vector>

#include "lbi/information.hpp"
#include "lbi/probability.hpp"
#include "lbi/semantic_channel.hpp"

namespace lbi {

/// Finite mixture over a binned instance space: component priors P(y_j)
/// plus one component distribution P(x|θ_j) per label. Components may be
/// backed by Gaussian truth-function parameters or stored directly.
struct MixtureModel {
    std::vector<double> weights;
    std::vector<Distribution> components;
    std::optional<std::vector<GaussianTruthParams>> params;

    std::size_t num_components() const { return weights.size(); }
    /// P(x_i) under the mixture.
    double predict(std::size_t i) const;
};

struct FitRecord {
    double shannon_mi = 0.0;       // R, bits
    double semantic_mi = 0.0;      // G, bits
    double r_minus_g = 0.0;
    double log_likelihood = 0.0;   // Σ_i P_data(x_i) log2 P_model(x_i)
};

struct FitTrace {
    std::vector<FitRecord> records;
    bool converged = false;
    std::vector<bool> collapsed;   // per-component collapse flags
};

struct MixtureFitResult {
    MixtureModel model;
    FitTrace trace;
};

struct MixtureFitOptions {
    std::size_t max_iter = 500;
    double tol_bits = 1e-9;        // stop when log-likelihood improves less
};

/// Deterministic default initialization: k evenly spaced centers over the
/// grid range, width = range/(2k), uniform weights.
MixtureModel default_mixture_init(std::size_t k, std::span<const double> grid);

/// R, G and log-likelihood of a model against a binned data distribution.
/// The Shannon channel is P(y_j|x) ∝ P(y_j) P(x|θ_j); G uses the truth
/// functions the components induce under the data marginal.
FitRecord mixture_diagnostics(const MixtureModel& model, const Distribution& data);

/// Baseline: standard EM on the binned data distribution with
/// free-form component updates.
MixtureFitResult em_fit(const Distribution& data, std::size_t k,
                        const MixtureModel& init,
                        const MixtureFitOptions& opts = {});

/// Channels' Matching fit. Step I re-fits each component's Gaussian truth
/// parameters by maximum semantic information against the posterior
/// sampling distribution; Step II drives the weights to the induced label
/// marginal (the R-minimizing fixed point).
MixtureFitResult cm_fit(const Distribution& data, std::size_t k,
                        const MixtureModel& init, std::span<const double> grid,
                        const MixtureFitOptions& opts = {});

}  // namespace lbi

#endif
