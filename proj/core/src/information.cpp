#include "lbi/information.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lbi {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

// Objective of Eq-22 form for an unnormalized Gaussian truth function,
// in nats. Works in log space so narrow widths cannot underflow.
double gaussian_gkl_nats(const Distribution& sampling, const Distribution& prior,
                         std::span<const double> grid, double c, double d) {
    const std::size_t m = grid.size();
    double e_max = kNegInf;
    std::vector<double> e(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double dev = (grid[i] - c) / d;
        e[i] = -0.5 * dev * dev;
        if (prior[i] > 0.0) e_max = std::max(e_max, e[i]);
    }
    double lse = 0.0;  // log Σ_i P(x_i) T_raw(x_i), shifted by e_max
    for (std::size_t i = 0; i < m; ++i) {
        if (prior[i] > 0.0) lse += prior[i] * std::exp(e[i] - e_max);
    }
    const double log_t_theta = e_max + std::log(lse);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (sampling[i] > 0.0) acc += sampling[i] * (e[i] - log_t_theta);
    }
    return acc;
}

}  // namespace

double entropy(const Distribution& p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

double shannon_mutual_information(const JointDistribution& joint) {
    const Distribution px = joint.instance_marginal();
    const Distribution py = joint.label_marginal();
    double mi = 0.0;
    for (std::size_t i = 0; i < joint.num_instances(); ++i) {
        for (std::size_t j = 0; j < joint.num_labels(); ++j) {
            const double p = joint.at(i, j);
            if (p > 0.0) mi += p * std::log2(p / (px[i] * py[j]));
        }
    }
    return mi;
}

double semantic_info_point(std::size_t x_index, const TruthFunction& t,
                           const Distribution& prior) {
    if (x_index >= t.size()) throw std::out_of_range("x index out of range");
    const double t_theta = logical_probability(t, prior);
    if (t_theta <= 0.0) throw std::runtime_error("zero logical probability");
    if (t[x_index] <= 0.0) return kNegInf;
    return std::log2(t[x_index] / t_theta);
}

double gaussian_semantic_info(double x, const GaussianTruthParams& params,
                              std::span<const double> grid,
                              const Distribution& prior) {
    if (!(params.width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
    if (grid.size() != prior.size()) throw std::invalid_argument("alphabet mismatch");
    double e_max = kNegInf;
    std::vector<double> e(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double dev = (grid[i] - params.center) / params.width;
        e[i] = -0.5 * dev * dev;
        if (prior[i] > 0.0) e_max = std::max(e_max, e[i]);
    }
    double lse = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (prior[i] > 0.0) lse += prior[i] * std::exp(e[i] - e_max);
    }
    const double log_t_theta = e_max + std::log(lse);
    const double dev = (x - params.center) / params.width;
    return (-0.5 * dev * dev - log_t_theta) / kLn2;
}

double generalized_kl(const Distribution& sampling, const TruthFunction& t,
                      const Distribution& prior) {
    if (sampling.size() != t.size() || prior.size() != t.size())
        throw std::invalid_argument("alphabet mismatch");
    const double t_theta = logical_probability(t, prior);
    if (t_theta <= 0.0) throw std::runtime_error("zero logical probability");
    double acc = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (sampling[i] <= 0.0) continue;
        if (t[i] <= 0.0) return kNegInf;
        acc += sampling[i] * std::log2(t[i] / t_theta);
    }
    return acc;
}

InfoReport semantic_mutual_information(const JointDistribution& joint,
                                       const SemanticChannel& sc) {
    if (sc.num_labels() != joint.num_labels() ||
        sc.num_instances() != joint.num_instances())
        throw std::invalid_argument("alphabet mismatch");
    const Distribution px = joint.instance_marginal();
    const Distribution py = joint.label_marginal();
    InfoReport report;
    for (std::size_t j = 0; j < joint.num_labels(); ++j) {
        if (py[j] <= 0.0) continue;
        if (!sc.defined(j))
            throw std::invalid_argument("undefined truth function for label with positive probability");
        const double t_theta = logical_probability(sc.truth(j), px);
        if (t_theta <= 0.0) throw std::runtime_error("zero logical probability");
        report.h_theta -= py[j] * std::log2(t_theta);
        const double gkl = generalized_kl(joint.conditional_given_label(j), sc.truth(j), px);
        report.value = (report.value == kNegInf || gkl == kNegInf)
                           ? kNegInf
                           : report.value + py[j] * gkl;
    }
    report.h_theta_given_x = report.h_theta - report.value;
    return report;
}

double log_likelihood_link(std::size_t m, std::size_t n,
                           const std::vector<double>& counts,
                           const SemanticChannel& sc, const Distribution& prior) {
    if (counts.size() != m * n || sc.num_labels() != n || prior.size() != m)
        throw std::invalid_argument("alphabet mismatch");
    double total = 0.0;
    for (double c : counts) {
        if (c < 0.0 || std::floor(c) != c)
            throw std::invalid_argument("counts must be non-negative integers");
        total += c;
    }
    if (total == 0.0) return 0.0;

    double via_info = 0.0;
    double direct = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double n_j = 0.0;
        std::vector<double> col(m);
        for (std::size_t i = 0; i < m; ++i) {
            col[i] = counts[i * n + j];
            n_j += col[i];
        }
        if (n_j == 0.0) continue;
        if (!sc.defined(j))
            throw std::invalid_argument("undefined truth function for counted label");
        const double gkl = generalized_kl(normalize(col), sc.truth(j), prior);
        if (gkl == kNegInf) return kNegInf;
        via_info += n_j * gkl;

        const Distribution lik = likelihood_from_truth(sc.truth(j), prior);
        for (std::size_t i = 0; i < m; ++i) {
            if (col[i] == 0.0) continue;
            if (lik[i] <= 0.0 || prior[i] <= 0.0) return kNegInf;
            direct += col[i] * std::log2(lik[i] / prior[i]);
        }
    }
    const double scale = std::max({std::abs(via_info), std::abs(direct), 1.0});
    if (std::abs(via_info - direct) > 1e-6 * scale)
        throw std::logic_error("log-likelihood link identity violated");
    return via_info;
}

GridSearchSpec GridSearchSpec::for_grid(std::span<const double> grid) {
    GridSearchSpec spec;
    spec.c_lo = grid.front();
    spec.c_hi = grid.back();
    const double range = grid.back() - grid.front();
    spec.d_lo = range / 100.0;
    spec.d_hi = range;
    return spec;
}

TruthFitResult optimize_truth_params(const Distribution& sampling,
                                     const Distribution& prior,
                                     std::span<const double> grid,
                                     const GridSearchSpec& spec) {
    if (sampling.size() != grid.size() || prior.size() != grid.size())
        throw std::invalid_argument("alphabet mismatch");
    if (spec.c_steps < 1 || spec.d_steps < 1 || !(spec.c_hi >= spec.c_lo) ||
        !(spec.d_hi >= spec.d_lo) || !(spec.d_lo > 0.0))
        throw std::invalid_argument("empty search space");

    auto scan = [&](double c_lo, double c_hi, std::size_t nc, double d_lo,
                    double d_hi, std::size_t nd, double& best_obj,
                    GaussianTruthParams& best) {
        for (std::size_t a = 0; a < nc; ++a) {
            const double c = nc == 1 ? c_lo : c_lo + (c_hi - c_lo) * a / double(nc - 1);
            for (std::size_t b = 0; b < nd; ++b) {
                const double d = nd == 1 ? d_lo : d_lo + (d_hi - d_lo) * b / double(nd - 1);
                const double obj = gaussian_gkl_nats(sampling, prior, grid, c, d);
                if (obj > best_obj) {
                    best_obj = obj;
                    best = GaussianTruthParams{c, d};
                }
            }
        }
    };

    double best_obj = kNegInf;
    GaussianTruthParams best{spec.c_lo, spec.d_lo};
    scan(spec.c_lo, spec.c_hi, spec.c_steps, spec.d_lo, spec.d_hi, spec.d_steps,
         best_obj, best);

    double step_c = spec.c_steps > 1 ? (spec.c_hi - spec.c_lo) / double(spec.c_steps - 1) : 0.0;
    double step_d = spec.d_steps > 1 ? (spec.d_hi - spec.d_lo) / double(spec.d_steps - 1) : 0.0;
    for (int round = 0; round < spec.refine_rounds; ++round) {
        const double c_lo = std::max(spec.c_lo, best.center - step_c);
        const double c_hi = std::min(spec.c_hi, best.center + step_c);
        const double d_lo = std::max(spec.d_lo, best.width - step_d);
        const double d_hi = std::min(spec.d_hi, best.width + step_d);
        scan(c_lo, c_hi, 21, d_lo, d_hi, 21, best_obj, best);
        step_c /= 10.0;
        step_d /= 10.0;
    }

    const double bits = generalized_kl(sampling, best.evaluate(grid), prior);
    return TruthFitResult{best, bits};
}

}  // namespace lbi
