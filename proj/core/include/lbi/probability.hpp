#ifndef LBI_PROBABILITY_HPP
#define LBI_PROBABILITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lbi {

// Absolute tolerance on probability sums. Constructors renormalize inputs
// whose sum deviates by less than kRenormTolerance and reject worse ones.
inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kRenormTolerance = 1e-6;

/// Finite ordered instance (or label) space. Each bin has a unique name and
/// a numeric representative value (bin midpoint for binned real variables).
class Alphabet {
public:
    Alphabet(std::vector<std::string> names, std::vector<double> values);

    /// m unnamed bins with representative values 0..m-1.
    static Alphabet indexed(std::size_t m, const std::string& prefix = "x");
    /// m bins covering [lo, hi], representatives at bin midpoints.
    static Alphabet binned(double lo, double hi, std::size_t m,
                           const std::string& prefix = "x");

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    double value(std::size_t i) const { return values_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<double>& values() const { return values_; }

    /// Index of the bin whose representative is closest to x.
    std::size_t nearest(double x) const;

private:
    std::vector<std::string> names_;
    std::vector<double> values_;
};

/// Normalized probability vector over an alphabet. Immutable after
/// construction.
class Distribution {
public:
    explicit Distribution(std::vector<double> probs);

    static Distribution uniform(std::size_t m);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& probs() const { return p_; }
    auto begin() const { return p_.begin(); }
    auto end() const { return p_.end(); }

private:
    std::vector<double> p_;
};

/// Subset of U as an indicator vector.
class CrispSet {
public:
    explicit CrispSet(std::vector<bool> members) : members_(std::move(members)) {}
    std::size_t size() const { return members_.size(); }
    bool contains(std::size_t i) const { return members_[i]; }
    /// Indicator values as a 0/1 truth-value vector.
    std::vector<double> indicator() const;

private:
    std::vector<bool> members_;
};

/// Rows are P(y|x_i); rows for instances with zero marginal probability are
/// undefined and carry no value.
class ShannonChannel {
public:
    explicit ShannonChannel(std::vector<std::optional<Distribution>> rows);

    std::size_t num_inputs() const { return rows_.size(); }
    std::size_t num_outputs() const { return n_; }
    bool defined(std::size_t i) const { return rows_[i].has_value(); }
    const Distribution& row(std::size_t i) const { return *rows_[i]; }
    /// Transition probability function P(y_j|x) as a vector over U.
    /// Entries for undefined rows are 0.
    std::vector<double> tpf(std::size_t j) const;

private:
    std::vector<std::optional<Distribution>> rows_;
    std::size_t n_ = 0;
};

/// P(x, y) over (U, V), optionally with the raw counts it came from.
class JointDistribution {
public:
    JointDistribution(std::size_t m, std::size_t n, std::vector<double> probs);

    static JointDistribution from_counts(std::size_t m, std::size_t n,
                                         const std::vector<double>& counts);

    std::size_t num_instances() const { return m_; }
    std::size_t num_labels() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return p_[i * n_ + j]; }

    Distribution instance_marginal() const;  // P(x)
    Distribution label_marginal() const;     // P(y)
    /// P(x|y_j). Throws if the label marginal is zero.
    Distribution conditional_given_label(std::size_t j) const;

    const std::optional<std::vector<double>>& counts() const { return counts_; }

private:
    std::size_t m_, n_;
    std::vector<double> p_;
    std::optional<std::vector<double>> counts_;
};

struct ChannelDecomposition {
    ShannonChannel channel;
    Distribution instance_marginal;
    Distribution label_marginal;
};

/// Scale a non-negative weight vector to sum 1. Throws "empty distribution"
/// on all-zero input.
Distribution normalize(const std::vector<double>& weights);

/// Classical Bayes' prediction: P'(x|y_j) from a transition probability
/// function and a (possibly changed) prior over U. Invariant under scaling
/// of tpf by any k > 0.
Distribution bayes_prediction(std::span<const double> tpf,
                              const Distribution& prior);

/// Bayes' Theorem I over one random variable and two set memberships:
/// T(B|A) = T(A|B) T(B) / T(A), T(A) = T(A|B) T(B) + T(A|B^c)(1 - T(B)).
double bayes_theorem_I(double t_a_given_b, double t_b, double t_a_given_bc);

/// Decompose a joint into the Shannon channel P(y|x) and both marginals.
ChannelDecomposition channel_and_marginals(const JointDistribution& joint);

}  // namespace lbi

#endif
