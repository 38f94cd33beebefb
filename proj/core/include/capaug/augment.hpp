#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "capaug/cooccurrence.hpp"
#include "capaug/corpus.hpp"
#include "capaug/rng.hpp"
#include "capaug/sampler.hpp"
#include "capaug/simplify.hpp"

namespace capaug {

struct AugmentPolicy {
  SamplerKind sampler = SamplerKind::Uniform;
  double coin_p = 0.5;           // probability a record trains on the augmented caption
  bool simplify_enabled = true;  // ablation switch
  bool exclude_sentence_objects = true;  // ablation: candidates may include co-objects
  int smoothing = 1;
  std::uint64_t seed = 0;
};

/// Pick the kept object o_i and the replaced object o_j among the distinct
/// classes mentioned: two distinct classes uniformly at random when at least
/// two are present, anchor == target for single-object sentences, nothing
/// for zero-mention sentences.
std::optional<std::pair<ObjectId, ObjectId>> select_anchor_target(
    const std::vector<Mention>& mentions, SplitRng& rng);

/// Replace every mention span of `target` with the canonical tokens of
/// `replacement`, re-agreeing an immediately preceding a/an. Throws
/// ValidationError when the caption has no mention of `target`.
Caption replace_object(const Caption& caption, ObjectId target, ObjectId replacement,
                       const Lexicon& lex);

enum class AugmentOutcome { Replaced, NoMentions, NoCandidates };

/// Produce the augmented record for one (image, caption) pair. All
/// randomness derives from policy.seed, the image id and the caption index,
/// through separate child streams for the coin, the anchor/target choice
/// and the replacement draw.
AugmentedRecord augment_record(const ImageRecord& image, int caption_index,
                               const AugmentPolicy& policy, SamplerState& state,
                               const Lexicon& lex, const ChunkerConfig& cfg,
                               AugmentOutcome* outcome = nullptr);

struct TracePoint {
  std::int64_t step = 0;
  double cv = 0.0;
  double row_entropy_mean = 0.0;
};

struct AugmentResult {
  std::vector<AugmentedRecord> records;
  std::vector<TracePoint> trace;  // uniformity of the working matrix (occ only)
  std::int64_t passthrough_no_candidates = 0;
};

/// Augment every training caption, in ascending (image_id, caption_index)
/// order. For the CooccurrenceUpdating kind the working matrix starts from
/// `cooc` and its uniformity is traced at step 0, every 1000 records and at
/// the end. The matrix must carry the lexicon's fingerprint.
AugmentResult augment_dataset(const Dataset& dataset, const AugmentPolicy& policy,
                              const CooccurrenceMatrix& cooc, const Lexicon& lex,
                              const ChunkerConfig& cfg);

}  // namespace capaug
