#ifndef LBI_SEMANTIC_CHANNEL_HPP
#define LBI_SEMANTIC_CHANNEL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lbi/probability.hpp"

namespace lbi {

/// Truth function T(θ_j|x) of one label over U. Longitudinally normalized:
/// the maximum over defined bins is 1.
class TruthFunction {
public:
    explicit TruthFunction(std::vector<double> values, std::string label = "");

    std::size_t size() const { return t_.size(); }
    double operator[](std::size_t i) const { return t_[i]; }
    const std::vector<double>& values() const { return t_; }
    const std::string& label() const { return label_; }

    bool is_crisp() const;

private:
    std::vector<double> t_;
    std::string label_;
};

/// One truth function per label. Labels no evidence ever selects are
/// undefined. Truth functions are not normalized across labels.
class SemanticChannel {
public:
    explicit SemanticChannel(std::vector<std::optional<TruthFunction>> tfs);

    std::size_t num_labels() const { return tfs_.size(); }
    std::size_t num_instances() const { return m_; }
    bool defined(std::size_t j) const { return tfs_[j].has_value(); }
    const TruthFunction& truth(std::size_t j) const { return *tfs_[j]; }

private:
    std::vector<std::optional<TruthFunction>> tfs_;
    std::size_t m_ = 0;
};

/// Parametric truth function exp(-(x-c)^2 / (2 d^2)).
struct GaussianTruthParams {
    double center = 0.0;
    double width = 1.0;

    /// Evaluate on a grid of representative values and re-normalize to
    /// max 1, so the truth-function invariant holds even when the center
    /// falls between grid points.
    TruthFunction evaluate(std::span<const double> grid,
                           const std::string& label = "") const;
};

/// Logical probability T(θ_j) = Σ_i P(x_i) T(θ_j|x_i).
double logical_probability(const TruthFunction& t, const Distribution& prior);

/// Bayes' Theorem III, forward: P(x|θ_j) = T(θ_j|x) P(x) / T(θ_j).
Distribution likelihood_from_truth(const TruthFunction& t, const Distribution& prior);

/// Bayes' Theorem III, backward: T(θ_j|x) = [P(x|θ_j)/P(x)] / max ratio.
/// Bins with zero prior carry no evidence and are excluded from the max.
TruthFunction truth_from_likelihood(const Distribution& lik, const Distribution& prior,
                                    const std::string& label = "");

/// Optimal truth function from a transition probability function:
/// T*(θ_j|x) = P(y_j|x) / max P(y_j|x).
TruthFunction truth_from_tpf(std::span<const double> tpf,
                             const std::string& label = "");

/// Optimal semantic channel of a joint: truth_from_tpf on each channel
/// column. Labels with zero marginal probability are undefined.
SemanticChannel semantic_channel_from_joint(const JointDistribution& joint);

}  // namespace lbi

#endif
