#ifndef LBI_CLASSIFICATION_HPP
#define LBI_CLASSIFICATION_HPP

#include <cstddef>
#include <vector>

#include "lbi/information.hpp"
#include "lbi/probability.hpp"
#include "lbi/semantic_channel.hpp"

namespace lbi {

/// Total assignment of each observation z in C to a label index in V.
using Classifier = std::vector<std::size_t>;

/// Label maximizing the point semantic information at x. Ties break to the
/// lowest label index.
std::size_t classify_semantic(std::size_t x_index, const SemanticChannel& sc,
                              const Distribution& prior);

/// Crisp variant: among labels with T(A_j|x) = 1, the one with the least
/// logical probability (richest connotation).
std::size_t classify_crisp(std::size_t x_index, const SemanticChannel& sc,
                           const Distribution& prior);

/// Step I of Channels' Matching: derive the label channel P(y_j|x) induced
/// by a classifier over observations, then the matched semantic channel.
/// Labels no observation maps to are undefined this round.
SemanticChannel cm_step_I(const JointDistribution& obs_joint, const Classifier& f,
                          std::size_t num_labels);

/// Conditional semantic information I(X;θ_j|z) for one observation column.
double conditional_semantic_info(const JointDistribution& obs_joint,
                                 std::size_t z_index, const TruthFunction& t,
                                 const Distribution& prior);

/// Step II: re-derive the classifier, assigning each z the label with
/// maximal conditional semantic information. Undefined labels are skipped;
/// ties break to the lowest label index.
Classifier cm_step_II(const JointDistribution& obs_joint, const SemanticChannel& sc);

struct CmClassificationResult {
    Classifier classifier;
    std::vector<double> trace_bits;  // semantic MI after each round's Step I
    bool converged = false;
    std::size_t iterations = 0;
};

/// Average semantic information of a classifier with its matched semantic
/// channel: Σ_z P(z) I(X;θ_f(z)|z).
double classifier_semantic_information(const JointDistribution& obs_joint,
                                       const Classifier& f,
                                       const SemanticChannel& sc);

/// Alternate Step I / Step II until the classifier is unchanged or max_iter
/// rounds have run. Deterministic; the trace is non-decreasing.
CmClassificationResult cm_iterate(const JointDistribution& obs_joint,
                                  const Classifier& f0, std::size_t num_labels,
                                  std::size_t max_iter = 100);

/// Default initial classifier: quantile partition of the observation space
/// into num_labels contiguous blocks.
Classifier quantile_partition(std::size_t num_observations, std::size_t num_labels);

}  // namespace lbi

#endif
