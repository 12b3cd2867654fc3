#include "lbi/semantic_channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lbi {

TruthFunction::TruthFunction(std::vector<double> values, std::string label)
    : t_(std::move(values)), label_(std::move(label)) {
    if (t_.empty()) throw std::invalid_argument("empty truth function");
    double mx = 0.0;
    for (double v : t_) {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("truth values must be in [0,1]");
        mx = std::max(mx, v);
    }
    if (std::abs(mx - 1.0) >= kRenormTolerance)
        throw std::invalid_argument("truth function is not longitudinally normalized");
    if (mx != 1.0) {
        for (double& v : t_) v /= mx;
    }
}

bool TruthFunction::is_crisp() const {
    return std::all_of(t_.begin(), t_.end(),
                       [](double v) { return v == 0.0 || v == 1.0; });
}

SemanticChannel::SemanticChannel(std::vector<std::optional<TruthFunction>> tfs)
    : tfs_(std::move(tfs)) {
    if (tfs_.empty()) throw std::invalid_argument("semantic channel must have labels");
    for (const auto& t : tfs_) {
        if (t) {
            if (m_ == 0) m_ = t->size();
            else if (t->size() != m_)
                throw std::invalid_argument("truth functions differ in size");
        }
    }
    if (m_ == 0) throw std::invalid_argument("semantic channel has no defined labels");
}

TruthFunction GaussianTruthParams::evaluate(std::span<const double> grid,
                                            const std::string& label) const {
    if (!(width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
    std::vector<double> t(grid.size());
    double mx = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double dev = (grid[i] - center) / width;
        t[i] = std::exp(-0.5 * dev * dev);
        mx = std::max(mx, t[i]);
    }
    if (mx <= 0.0) throw std::runtime_error("gaussian truth function underflows on grid");
    for (double& v : t) v /= mx;
    return TruthFunction(std::move(t), label);
}

double logical_probability(const TruthFunction& t, const Distribution& prior) {
    if (t.size() != prior.size()) throw std::invalid_argument("alphabet mismatch");
    double lp = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) lp += prior[i] * t[i];
    return std::clamp(lp, 0.0, 1.0);
}

Distribution likelihood_from_truth(const TruthFunction& t, const Distribution& prior) {
    if (t.size() != prior.size()) throw std::invalid_argument("alphabet mismatch");
    std::vector<double> p(t.size());
    double lp = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        p[i] = t[i] * prior[i];
        lp += p[i];
    }
    if (lp <= 0.0) throw std::runtime_error("label never true under prior");
    for (double& v : p) v /= lp;
    return Distribution(std::move(p));
}

TruthFunction truth_from_likelihood(const Distribution& lik, const Distribution& prior,
                                    const std::string& label) {
    if (lik.size() != prior.size()) throw std::invalid_argument("alphabet mismatch");
    std::vector<double> ratio(lik.size(), 0.0);
    double mx = 0.0;
    for (std::size_t i = 0; i < lik.size(); ++i) {
        if (prior[i] <= 0.0) {
            if (lik[i] > 0.0)
                throw std::runtime_error("likelihood outside prior support");
            continue;
        }
        ratio[i] = lik[i] / prior[i];
        mx = std::max(mx, ratio[i]);
    }
    if (mx <= 0.0) throw std::runtime_error("label never true under prior");
    for (double& v : ratio) v /= mx;
    return TruthFunction(std::move(ratio), label);
}

TruthFunction truth_from_tpf(std::span<const double> tpf, const std::string& label) {
    double mx = 0.0;
    for (double v : tpf) {
        if (v < 0.0 || v > 1.0 + kSumTolerance || !std::isfinite(v))
            throw std::invalid_argument("tpf entries must be in [0,1]");
        mx = std::max(mx, v);
    }
    if (mx <= 0.0) throw std::runtime_error("label never selected");
    std::vector<double> t(tpf.begin(), tpf.end());
    for (double& v : t) v /= mx;
    return TruthFunction(std::move(t), label);
}

SemanticChannel semantic_channel_from_joint(const JointDistribution& joint) {
    const auto decomp = channel_and_marginals(joint);
    std::vector<std::optional<TruthFunction>> tfs(joint.num_labels());
    for (std::size_t j = 0; j < joint.num_labels(); ++j) {
        if (decomp.label_marginal[j] <= 0.0) continue;
        tfs[j] = truth_from_tpf(decomp.channel.tpf(j));
    }
    return SemanticChannel(std::move(tfs));
}

}  // namespace lbi
