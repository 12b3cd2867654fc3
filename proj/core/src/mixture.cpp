#include "lbi/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lbi {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kCollapseWeight = 1e-12;
constexpr std::size_t kWeightLoopMax = 200;
constexpr double kWeightLoopTol = 1e-12;

void check_model(const MixtureModel& model, std::size_t m) {
    if (model.weights.empty() || model.components.size() != model.weights.size())
        throw std::invalid_argument("mixture model weights/components mismatch");
    double sum = 0.0;
    for (double w : model.weights) {
        if (w < 0.0) throw std::invalid_argument("negative mixture weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) >= kRenormTolerance)
        throw std::invalid_argument("mixture weights do not sum to 1");
    for (const auto& c : model.components) {
        if (c.size() != m) throw std::invalid_argument("component size mismatch");
    }
}

// Responsibilities P(y_j|x_i); rows with zero model mass stay zero.
std::vector<double> responsibilities(const MixtureModel& model, std::size_t m) {
    const std::size_t k = model.num_components();
    std::vector<double> r(m * k, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double pm = model.predict(i);
        if (pm <= 0.0) continue;
        for (std::size_t j = 0; j < k; ++j)
            r[i * k + j] = model.weights[j] * model.components[j][i] / pm;
    }
    return r;
}

Distribution component_from_params(const GaussianTruthParams& p,
                                   std::span<const double> grid) {
    const TruthFunction t = p.evaluate(grid);
    return likelihood_from_truth(t, Distribution::uniform(grid.size()));
}

}  // namespace

double MixtureModel::predict(std::size_t i) const {
    double p = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) p += weights[j] * components[j][i];
    return p;
}

MixtureModel default_mixture_init(std::size_t k, std::span<const double> grid) {
    if (k < 1) throw std::invalid_argument("need at least one component");
    const double lo = grid.front(), hi = grid.back();
    const double range = hi - lo;
    MixtureModel model;
    model.weights.assign(k, 1.0 / static_cast<double>(k));
    std::vector<GaussianTruthParams> params;
    for (std::size_t j = 0; j < k; ++j) {
        GaussianTruthParams p{lo + (static_cast<double>(j) + 0.5) * range / k,
                              range / (2.0 * static_cast<double>(k))};
        params.push_back(p);
        model.components.push_back(component_from_params(p, grid));
    }
    model.params = std::move(params);
    return model;
}

FitRecord mixture_diagnostics(const MixtureModel& model, const Distribution& data) {
    const std::size_t m = data.size();
    const std::size_t k = model.num_components();
    check_model(model, m);

    const std::vector<double> resp = responsibilities(model, m);
    std::vector<double> ymarg(k, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) ymarg[j] += data[i] * resp[i * k + j];

    FitRecord rec;
    for (std::size_t i = 0; i < m; ++i) {
        if (data[i] <= 0.0) continue;
        const double pm = model.predict(i);
        if (pm <= 0.0) {
            rec.log_likelihood = kNegInf;
            continue;
        }
        rec.log_likelihood += data[i] * std::log2(pm);
        for (std::size_t j = 0; j < k; ++j) {
            const double q = data[i] * resp[i * k + j];
            if (q <= 0.0) continue;
            rec.shannon_mi += q * std::log2(resp[i * k + j] / ymarg[j]);
            rec.semantic_mi += q * std::log2(model.components[j][i] / data[i]);
        }
    }
    rec.r_minus_g = rec.shannon_mi - rec.semantic_mi;
    return rec;
}

MixtureFitResult em_fit(const Distribution& data, std::size_t k,
                        const MixtureModel& init, const MixtureFitOptions& opts) {
    const std::size_t m = data.size();
    if (k != init.num_components()) throw std::invalid_argument("k/init mismatch");
    check_model(init, m);
    if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

    MixtureFitResult result;
    result.model = init;
    result.trace.collapsed.assign(k, false);
    result.trace.records.push_back(mixture_diagnostics(result.model, data));

    for (std::size_t it = 0; it < opts.max_iter; ++it) {
        const std::vector<double> resp = responsibilities(result.model, m);
        std::vector<double> w(k, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) w[j] += data[i] * resp[i * k + j];
        for (std::size_t j = 0; j < k; ++j) {
            if (w[j] < kCollapseWeight) {
                result.trace.collapsed[j] = true;
                result.model.weights[j] = w[j];
                continue;  // frozen component
            }
            std::vector<double> c(m);
            for (std::size_t i = 0; i < m; ++i) c[i] = data[i] * resp[i * k + j] / w[j];
            result.model.components[j] = normalize(c);
            result.model.weights[j] = w[j];
        }
        result.model.params.reset();
        const FitRecord rec = mixture_diagnostics(result.model, data);
        const double prev = result.trace.records.back().log_likelihood;
        result.trace.records.push_back(rec);
        if (std::abs(rec.log_likelihood - prev) < opts.tol_bits) {
            result.trace.converged = true;
            break;
        }
    }
    return result;
}

MixtureFitResult cm_fit(const Distribution& data, std::size_t k,
                        const MixtureModel& init, std::span<const double> grid,
                        const MixtureFitOptions& opts) {
    const std::size_t m = data.size();
    if (k != init.num_components()) throw std::invalid_argument("k/init mismatch");
    if (grid.size() != m) throw std::invalid_argument("grid/data size mismatch");
    check_model(init, m);
    if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

    const GridSearchSpec spec = GridSearchSpec::for_grid(grid);
    const Distribution uniform = Distribution::uniform(m);

    auto weight_fixed_point = [&](MixtureModel& model) {
        for (std::size_t round = 0; round < kWeightLoopMax; ++round) {
            const std::vector<double> r2 = responsibilities(model, m);
            std::vector<double> w(k, 0.0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < k; ++j) w[j] += data[i] * r2[i * k + j];
            double l1 = 0.0;
            for (std::size_t j = 0; j < k; ++j) l1 += std::abs(w[j] - model.weights[j]);
            model.weights = std::move(w);
            if (l1 < kWeightLoopTol) break;
        }
    };

    MixtureFitResult result;
    result.model = init;
    result.trace.collapsed.assign(k, false);
    if (!result.model.params) {
        // Back-fit Gaussian parameters to whatever components were supplied.
        std::vector<GaussianTruthParams> params;
        for (std::size_t j = 0; j < k; ++j) {
            params.push_back(
                optimize_truth_params(result.model.components[j], uniform, grid, spec).params);
            result.model.components[j] = component_from_params(params.back(), grid);
        }
        result.model.params = std::move(params);
    }
    // Align the initial weights with the induced label marginal so every
    // recorded diagnostic sits at a weight fixed point.
    weight_fixed_point(result.model);
    result.trace.records.push_back(mixture_diagnostics(result.model, data));

    for (std::size_t it = 0; it < opts.max_iter; ++it) {
        // Step I: the semantic channel matches the Shannon channel. Each
        // component's truth parameters are re-fit by MSI against the
        // posterior sampling distribution P(x|y_j) under the uniform
        // reference. The incumbent parameters are kept when the grid
        // search cannot beat them.
        const std::vector<double> resp = responsibilities(result.model, m);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<double> s(m);
            double mass = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                s[i] = data[i] * resp[i * k + j];
                mass += s[i];
            }
            if (mass < kCollapseWeight) {
                result.trace.collapsed[j] = true;
                continue;  // frozen component
            }
            const Distribution sampling = normalize(s);
            const TruthFitResult fit = optimize_truth_params(sampling, uniform, grid, spec);
            const double incumbent = generalized_kl(
                sampling, (*result.model.params)[j].evaluate(grid), uniform);
            if (fit.info_bits > incumbent) {
                (*result.model.params)[j] = fit.params;
                result.model.components[j] = component_from_params(fit.params, grid);
            }
        }

        // Step II: the Shannon channel matches the semantic channel. Drive
        // the weights to the induced label marginal.
        weight_fixed_point(result.model);

        const FitRecord rec = mixture_diagnostics(result.model, data);
        const double prev = result.trace.records.back().log_likelihood;
        result.trace.records.push_back(rec);
        if (std::abs(rec.log_likelihood - prev) < opts.tol_bits) {
            result.trace.converged = true;
            break;
        }
    }
    return result;
}

}  // namespace lbi
