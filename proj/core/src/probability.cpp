#include "lbi/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lbi {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<double> values)
    : names_(std::move(names)), values_(std::move(values)) {
    if (names_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    if (values_.size() != names_.size())
        throw std::invalid_argument("alphabet names/values size mismatch");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t k = i + 1; k < names_.size(); ++k) {
            if (names_[i] == names_[k])
                throw std::invalid_argument("duplicate alphabet name: " + names_[i]);
        }
    }
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (!(values_[i] > values_[i - 1]))
            throw std::invalid_argument("alphabet values must be strictly increasing");
    }
}

Alphabet Alphabet::indexed(std::size_t m, const std::string& prefix) {
    std::vector<std::string> names(m);
    std::vector<double> values(m);
    for (std::size_t i = 0; i < m; ++i) {
        names[i] = prefix + std::to_string(i);
        values[i] = static_cast<double>(i);
    }
    return Alphabet(std::move(names), std::move(values));
}

Alphabet Alphabet::binned(double lo, double hi, std::size_t m, const std::string& prefix) {
    if (m < 1 || !(hi > lo)) throw std::invalid_argument("bad binning range");
    std::vector<std::string> names(m);
    std::vector<double> values(m);
    const double w = (hi - lo) / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
        names[i] = prefix + std::to_string(i);
        values[i] = lo + (static_cast<double>(i) + 0.5) * w;
    }
    return Alphabet(std::move(names), std::move(values));
}

std::size_t Alphabet::nearest(double x) const {
    std::size_t best = 0;
    double bd = std::abs(x - values_[0]);
    for (std::size_t i = 1; i < values_.size(); ++i) {
        const double d = std::abs(x - values_[i]);
        if (d < bd) { bd = d; best = i; }
    }
    return best;
}

Distribution::Distribution(std::vector<double> probs) : p_(std::move(probs)) {
    if (p_.empty()) throw std::invalid_argument("empty distribution");
    double sum = 0.0;
    for (double v : p_) {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("distribution entries must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) >= kRenormTolerance)
        throw std::invalid_argument("distribution does not sum to 1");
    if (std::abs(sum - 1.0) > 0.0) {
        for (double& v : p_) v /= sum;
    }
}

Distribution Distribution::uniform(std::size_t m) {
    return Distribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

std::vector<double> CrispSet::indicator() const {
    std::vector<double> v(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) v[i] = members_[i] ? 1.0 : 0.0;
    return v;
}

ShannonChannel::ShannonChannel(std::vector<std::optional<Distribution>> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("channel must have rows");
    for (const auto& r : rows_) {
        if (r) {
            if (n_ == 0) n_ = r->size();
            else if (r->size() != n_)
                throw std::invalid_argument("channel rows differ in size");
        }
    }
    if (n_ == 0) throw std::invalid_argument("channel has no defined rows");
}

std::vector<double> ShannonChannel::tpf(std::size_t j) const {
    std::vector<double> col(rows_.size(), 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i]) col[i] = (*rows_[i])[j];
    }
    return col;
}

JointDistribution::JointDistribution(std::size_t m, std::size_t n,
                                     std::vector<double> probs)
    : m_(m), n_(n), p_(std::move(probs)) {
    if (m_ == 0 || n_ == 0 || p_.size() != m_ * n_)
        throw std::invalid_argument("joint dimensions mismatch");
    double sum = 0.0;
    for (double v : p_) {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("joint entries must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) >= kRenormTolerance)
        throw std::invalid_argument("joint does not sum to 1");
    if (std::abs(sum - 1.0) > 0.0) {
        for (double& v : p_) v /= sum;
    }
}

JointDistribution JointDistribution::from_counts(std::size_t m, std::size_t n,
                                                 const std::vector<double>& counts) {
    if (counts.size() != m * n) throw std::invalid_argument("joint dimensions mismatch");
    double total = 0.0;
    for (double c : counts) {
        if (c < 0.0 || !std::isfinite(c))
            throw std::invalid_argument("counts must be non-negative");
        total += c;
    }
    if (total <= 0.0) throw std::invalid_argument("empty distribution");
    std::vector<double> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) probs[i] = counts[i] / total;
    JointDistribution j(m, n, std::move(probs));
    j.counts_ = counts;
    return j;
}

Distribution JointDistribution::instance_marginal() const {
    std::vector<double> p(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) p[i] += at(i, j);
    return Distribution(std::move(p));
}

Distribution JointDistribution::label_marginal() const {
    std::vector<double> p(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) p[j] += at(i, j);
    return Distribution(std::move(p));
}

Distribution JointDistribution::conditional_given_label(std::size_t j) const {
    std::vector<double> p(m_);
    for (std::size_t i = 0; i < m_; ++i) p[i] = at(i, j);
    return normalize(p);
}

Distribution normalize(const std::vector<double>& weights) {
    double sum = 0.0;
    for (double v : weights) {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("weights must be non-negative");
        sum += v;
    }
    if (sum <= 0.0) throw std::runtime_error("empty distribution");
    std::vector<double> p(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) p[i] = weights[i] / sum;
    return Distribution(std::move(p));
}

Distribution bayes_prediction(std::span<const double> tpf, const Distribution& prior) {
    if (tpf.size() != prior.size())
        throw std::invalid_argument("tpf/prior size mismatch");
    std::vector<double> p(tpf.size());
    double denom = 0.0;
    for (std::size_t i = 0; i < tpf.size(); ++i) {
        if (tpf[i] < 0.0 || !std::isfinite(tpf[i]))
            throw std::invalid_argument("tpf entries must be non-negative");
        p[i] = tpf[i] * prior[i];
        denom += p[i];
    }
    if (denom <= 0.0) throw std::runtime_error("incompatible evidence");
    for (double& v : p) v /= denom;
    return Distribution(std::move(p));
}

double bayes_theorem_I(double t_a_given_b, double t_b, double t_a_given_bc) {
    for (double v : {t_a_given_b, t_b, t_a_given_bc}) {
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("truth values must be in [0,1]");
    }
    const double t_a = t_a_given_b * t_b + t_a_given_bc * (1.0 - t_b);
    if (t_a <= 0.0) throw std::runtime_error("zero-probability condition");
    return t_a_given_b * t_b / t_a;
}

ChannelDecomposition channel_and_marginals(const JointDistribution& joint) {
    const std::size_t m = joint.num_instances();
    const std::size_t n = joint.num_labels();
    std::vector<std::optional<Distribution>> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> row(n);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = joint.at(i, j);
            sum += row[j];
        }
        if (sum > 0.0) {
            for (double& v : row) v /= sum;
            rows[i] = Distribution(std::move(row));
        }
    }
    return ChannelDecomposition{ShannonChannel(std::move(rows)),
                                joint.instance_marginal(), joint.label_marginal()};
}

}  // namespace lbi
