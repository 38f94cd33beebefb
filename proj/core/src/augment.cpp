#include "capaug/augment.hpp"

#include <algorithm>
#include <set>

#include "capaug/errors.hpp"

namespace capaug {

namespace {

// Child-stream tags under the run seed.
constexpr std::uint64_t kCoinStream = 0x636f696e;      // "coin"
constexpr std::uint64_t kSelectStream = 0x73656c63;    // "selc"
constexpr std::uint64_t kSampleStream = 0x73616d70;    // "samp"

SplitRng record_stream(std::uint64_t seed, std::uint64_t purpose, std::int64_t image_id,
                       int caption_index) {
  return SplitRng(seed)
      .child(purpose)
      .child(static_cast<std::uint64_t>(image_id))
      .child(static_cast<std::uint64_t>(caption_index));
}

std::vector<ObjectId> distinct_classes(const std::vector<Mention>& mentions) {
  std::vector<ObjectId> classes;
  for (const Mention& m : mentions) {
    if (std::find(classes.begin(), classes.end(), m.object) == classes.end())
      classes.push_back(m.object);
  }
  return classes;
}

std::vector<ObjectId> swap_label(const std::vector<ObjectId>& labels, ObjectId removed,
                                 ObjectId added) {
  std::set<ObjectId> out(labels.begin(), labels.end());
  out.erase(removed);
  out.insert(added);
  return {out.begin(), out.end()};
}

}  // namespace

std::optional<std::pair<ObjectId, ObjectId>> select_anchor_target(
    const std::vector<Mention>& mentions, SplitRng& rng) {
  const std::vector<ObjectId> classes = distinct_classes(mentions);
  if (classes.empty()) return std::nullopt;
  if (classes.size() == 1) return std::make_pair(classes[0], classes[0]);

  const auto n = classes.size();
  const auto a = static_cast<std::size_t>(rng.next_below(n));
  auto t = static_cast<std::size_t>(rng.next_below(n - 1));
  if (t >= a) ++t;
  return std::make_pair(classes[a], classes[t]);
}

Caption replace_object(const Caption& caption, ObjectId target, ObjectId replacement,
                       const Lexicon& lex) {
  const std::vector<Mention> mentions = lex.match_mentions(caption.tokens);
  const TokenSeq& insert = lex.canonical_name(replacement);

  bool found = false;
  Caption out;
  out.tokens.reserve(caption.tokens.size());
  std::size_t next = 0;
  std::size_t pos = 0;
  while (pos < caption.tokens.size()) {
    if (next < mentions.size() &&
        pos == static_cast<std::size_t>(mentions[next].start)) {
      const Mention& m = mentions[next];
      if (m.object == target) {
        found = true;
        if (!out.tokens.empty()) {
          std::string& prev = out.tokens.back();
          if (prev == "a" || prev == "an") prev = article_agree(prev, insert.front());
        }
        out.tokens.insert(out.tokens.end(), insert.begin(), insert.end());
      } else {
        for (int t = m.start; t < m.end; ++t)
          out.tokens.push_back(caption.tokens[static_cast<std::size_t>(t)]);
      }
      pos = static_cast<std::size_t>(m.end);
      ++next;
      continue;
    }
    out.tokens.push_back(caption.tokens[pos]);
    ++pos;
  }

  if (!found)
    throw ValidationError("replace_object: caption has no mention of target class " +
                          std::to_string(target));
  return out;
}

AugmentedRecord augment_record(const ImageRecord& image, int caption_index,
                               const AugmentPolicy& policy, SamplerState& state,
                               const Lexicon& lex, const ChunkerConfig& cfg,
                               AugmentOutcome* outcome) {
  if (caption_index < 0 || caption_index >= static_cast<int>(image.captions.size())) {
    throw ValidationError("caption index " + std::to_string(caption_index) +
                          " out of range for image " + std::to_string(image.image_id));
  }
  const Caption& original = image.captions[static_cast<std::size_t>(caption_index)];

  AugmentedRecord rec;
  rec.image_id = image.image_id;
  rec.caption_index = caption_index;
  rec.original = original;
  rec.simplified = policy.simplify_enabled ? simplify(original, lex, cfg) : original;
  rec.augmented = rec.simplified;
  rec.labels_original = image.gt_objects;
  rec.labels_augmented = image.gt_objects;
  rec.sampler = std::string(sampler_name(policy.sampler));
  rec.seed = policy.seed;

  AugmentOutcome result = AugmentOutcome::NoMentions;
  const std::vector<Mention> mentions = lex.match_mentions(rec.simplified.tokens);
  SplitRng select_rng =
      record_stream(policy.seed, kSelectStream, image.image_id, caption_index);
  if (auto pair = select_anchor_target(mentions, select_rng)) {
    const auto [anchor, target] = *pair;
    const bool single_object = anchor == target;
    std::vector<ObjectId> present =
        policy.exclude_sentence_objects ? distinct_classes(mentions)
                                        : std::vector<ObjectId>{target};
    CandidateSet cs = candidate_set(present, anchor, target, lex.size());
    if (cs.empty()) {
      result = AugmentOutcome::NoCandidates;
    } else {
      SplitRng sample_rng =
          record_stream(policy.seed, kSampleStream, image.image_id, caption_index);
      const ObjectId sampled = state.sample(cs, sample_rng, single_object);
      rec.anchor = anchor;
      rec.replaced = target;
      rec.sampled = sampled;
      rec.augmented = replace_object(rec.simplified, target, sampled, lex);
      rec.labels_augmented = swap_label(rec.labels_original, target, sampled);
      result = AugmentOutcome::Replaced;
    }
  }

  SplitRng coin_rng = record_stream(policy.seed, kCoinStream, image.image_id, caption_index);
  rec.used_augmented = coin_rng.next_bernoulli(policy.coin_p);

  if (outcome) *outcome = result;
  return rec;
}

AugmentResult augment_dataset(const Dataset& dataset, const AugmentPolicy& policy,
                              const CooccurrenceMatrix& cooc, const Lexicon& lex,
                              const ChunkerConfig& cfg) {
  if (!cooc.lexicon_fingerprint().empty() && cooc.lexicon_fingerprint() != lex.fingerprint())
    throw ValidationError("co-occurrence matrix was built with a different lexicon (" +
                          cooc.lexicon_fingerprint() + " vs " + lex.fingerprint() + ")");
  if (dataset.count(Split::Train) == 0)
    throw ValidationError("dataset has no training images to augment");

  std::vector<const ImageRecord*> train;
  train.reserve(dataset.images.size());
  for (const ImageRecord& image : dataset.images)
    if (image.split == Split::Train) train.push_back(&image);
  std::sort(train.begin(), train.end(), [](const ImageRecord* a, const ImageRecord* b) {
    return a->image_id < b->image_id;
  });

  const bool trace_enabled = policy.sampler == SamplerKind::CooccurrenceUpdating;
  SamplerState state(policy.sampler, cooc, policy.smoothing);

  AugmentResult result;
  auto record_trace = [&](std::int64_t step) {
    const UniformityStats stats = uniformity(state.matrix());
    result.trace.push_back({step, stats.cv, stats.row_entropy_mean});
  };
  if (trace_enabled) record_trace(0);

  std::int64_t step = 0;
  for (const ImageRecord* image : train) {
    for (int ci = 0; ci < static_cast<int>(image->captions.size()); ++ci) {
      AugmentOutcome outcome;
      result.records.push_back(
          augment_record(*image, ci, policy, state, lex, cfg, &outcome));
      if (outcome == AugmentOutcome::NoCandidates) ++result.passthrough_no_candidates;
      ++step;
      if (trace_enabled && step % 1000 == 0) record_trace(step);
    }
  }
  if (trace_enabled && step % 1000 != 0) record_trace(step);
  return result;
}

}  // namespace capaug
