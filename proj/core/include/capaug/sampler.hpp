#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "capaug/cooccurrence.hpp"
#include "capaug/lexicon.hpp"
#include "capaug/rng.hpp"

namespace capaug {

/// The three replacement-object distributions.
enum class SamplerKind { Uniform, InverseMultinomial, CooccurrenceUpdating };

std::string_view sampler_name(SamplerKind kind);  // uniform | inverse | occ
std::optional<SamplerKind> sampler_from_name(std::string_view name);

/// Anchor o_i, target o_j, and the admissible replacements o_k: every class
/// not already present in the sentence, in ascending id order.
struct CandidateSet {
  ObjectId anchor = 0;
  ObjectId target = 0;
  std::vector<ObjectId> candidates;

  bool empty() const { return candidates.empty(); }
};

/// Build the candidate set for a sentence. `sentence_objects` are the
/// distinct classes present. An empty candidate set (sentence contains all N
/// classes) is returned as-is; callers fall back to a pass-through record.
CandidateSet candidate_set(const std::vector<ObjectId>& sentence_objects, ObjectId anchor,
                           ObjectId target, int n);

/// Replacement-object sampler over a working co-occurrence matrix.
///
/// Uniform ignores the matrix. The inverse kinds weight candidate k by
/// 1 / (m_ik + smoothing/N) where m_ik is the normalized anchor row, then
/// renormalize over the candidate set; the row normalization makes the
/// weights invariant to the scale of the anchor row, and the smoothing
/// pseudo-mass keeps them finite at zero counts. An all-zero anchor row
/// degenerates to uniform. CooccurrenceUpdating additionally mutates the
/// working matrix after every draw: the sampled pair (i, k) gains one count
/// and the replaced pair (i, j) loses one, clamped at zero, both applied
/// symmetrically.
class SamplerState {
 public:
  SamplerState(SamplerKind kind, CooccurrenceMatrix working, int smoothing = 1);

  SamplerKind kind() const { return kind_; }
  int smoothing() const { return smoothing_; }
  const CooccurrenceMatrix& matrix() const { return matrix_; }

  /// Probability of each candidate, in candidate order; sums to 1.
  std::vector<double> weights(const CandidateSet& cs) const;

  /// Draw one replacement object. With `force_uniform` the draw is uniform
  /// over the candidates regardless of kind (single-object sentences); the
  /// co-occurrence update still applies for the updating kind.
  ObjectId sample(const CandidateSet& cs, SplitRng& rng, bool force_uniform = false);

 private:
  SamplerKind kind_;
  CooccurrenceMatrix matrix_;
  int smoothing_;
};

}  // namespace capaug
