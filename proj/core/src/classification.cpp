#include "lbi/classification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lbi {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::size_t classify_semantic(std::size_t x_index, const SemanticChannel& sc,
                              const Distribution& prior) {
    bool any = false;
    std::size_t best = 0;
    double best_score = kNegInf;
    for (std::size_t j = 0; j < sc.num_labels(); ++j) {
        if (!sc.defined(j)) continue;
        const double score = semantic_info_point(x_index, sc.truth(j), prior);
        if (score == kNegInf) continue;
        if (!any || score > best_score) {
            any = true;
            best = j;
            best_score = score;
        }
    }
    if (!any) throw std::runtime_error("no admissible label");
    return best;
}

std::size_t classify_crisp(std::size_t x_index, const SemanticChannel& sc,
                           const Distribution& prior) {
    bool any = false;
    std::size_t best = 0;
    double best_lp = 2.0;
    for (std::size_t j = 0; j < sc.num_labels(); ++j) {
        if (!sc.defined(j)) continue;
        const TruthFunction& t = sc.truth(j);
        if (!t.is_crisp())
            throw std::invalid_argument("classify_crisp requires 0/1 truth functions");
        if (t[x_index] != 1.0) continue;
        const double lp = logical_probability(t, prior);
        if (!any || lp < best_lp) {
            any = true;
            best = j;
            best_lp = lp;
        }
    }
    if (!any) throw std::runtime_error("uncovered instance");
    return best;
}

SemanticChannel cm_step_I(const JointDistribution& obs_joint, const Classifier& f,
                          std::size_t num_labels) {
    const std::size_t m = obs_joint.num_instances();
    const std::size_t nz = obs_joint.num_labels();
    if (f.size() != nz) throw std::invalid_argument("classifier not total");
    const auto decomp = channel_and_marginals(obs_joint);

    std::vector<std::optional<TruthFunction>> tfs(num_labels);
    for (std::size_t j = 0; j < num_labels; ++j) {
        std::vector<double> tpf(m, 0.0);
        double mx = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!decomp.channel.defined(i)) continue;
            for (std::size_t z = 0; z < nz; ++z) {
                if (f[z] == j) tpf[i] += decomp.channel.row(i)[z];
            }
            mx = std::max(mx, tpf[i]);
        }
        if (mx > 0.0) tfs[j] = truth_from_tpf(tpf);
    }
    return SemanticChannel(std::move(tfs));
}

double conditional_semantic_info(const JointDistribution& obs_joint,
                                 std::size_t z_index, const TruthFunction& t,
                                 const Distribution& prior) {
    const double t_theta = logical_probability(t, prior);
    if (t_theta <= 0.0) throw std::runtime_error("zero logical probability");
    double col_sum = 0.0;
    for (std::size_t i = 0; i < obs_joint.num_instances(); ++i)
        col_sum += obs_joint.at(i, z_index);
    if (col_sum <= 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < obs_joint.num_instances(); ++i) {
        const double p = obs_joint.at(i, z_index) / col_sum;
        if (p <= 0.0) continue;
        if (t[i] <= 0.0) return kNegInf;
        acc += p * std::log2(t[i] / t_theta);
    }
    return acc;
}

Classifier cm_step_II(const JointDistribution& obs_joint, const SemanticChannel& sc) {
    const std::size_t nz = obs_joint.num_labels();
    const Distribution prior = obs_joint.instance_marginal();
    Classifier f(nz, 0);
    std::size_t first_defined = 0;
    while (first_defined < sc.num_labels() && !sc.defined(first_defined)) ++first_defined;
    if (first_defined == sc.num_labels())
        throw std::runtime_error("no defined truth functions");
    for (std::size_t z = 0; z < nz; ++z) {
        std::size_t best = first_defined;
        double best_score = kNegInf;
        bool any = false;
        for (std::size_t j = 0; j < sc.num_labels(); ++j) {
            if (!sc.defined(j)) continue;
            const double score = conditional_semantic_info(obs_joint, z, sc.truth(j), prior);
            if (!any || score > best_score) {
                any = true;
                best = j;
                best_score = score;
            }
        }
        f[z] = best;
    }
    return f;
}

double classifier_semantic_information(const JointDistribution& obs_joint,
                                       const Classifier& f,
                                       const SemanticChannel& sc) {
    const Distribution prior = obs_joint.instance_marginal();
    const Distribution pz = obs_joint.label_marginal();
    double acc = 0.0;
    for (std::size_t z = 0; z < obs_joint.num_labels(); ++z) {
        if (pz[z] <= 0.0) continue;
        if (!sc.defined(f[z])) throw std::runtime_error("classifier uses undefined label");
        const double score = conditional_semantic_info(obs_joint, z, sc.truth(f[z]), prior);
        if (score == kNegInf) return kNegInf;
        acc += pz[z] * score;
    }
    return acc;
}

CmClassificationResult cm_iterate(const JointDistribution& obs_joint,
                                  const Classifier& f0, std::size_t num_labels,
                                  std::size_t max_iter) {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
    CmClassificationResult result;
    result.classifier = f0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        const SemanticChannel sc = cm_step_I(obs_joint, result.classifier, num_labels);
        result.trace_bits.push_back(
            classifier_semantic_information(obs_joint, result.classifier, sc));
        Classifier next = cm_step_II(obs_joint, sc);
        ++result.iterations;
        if (next == result.classifier) {
            result.converged = true;
            break;
        }
        result.classifier = std::move(next);
    }
    return result;
}

Classifier quantile_partition(std::size_t num_observations, std::size_t num_labels) {
    if (num_labels == 0) throw std::invalid_argument("need at least one label");
    Classifier f(num_observations);
    for (std::size_t z = 0; z < num_observations; ++z)
        f[z] = std::min(num_labels - 1, z * num_labels / num_observations);
    return f;
}

}  // namespace lbi
