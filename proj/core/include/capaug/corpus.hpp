#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "capaug/lexicon.hpp"

namespace capaug {

enum class Split { Train, Val, Test };

std::string_view split_name(Split s);
std::optional<Split> split_from_name(std::string_view name);

/// A tokenized caption. Tokens are lowercase and contain no whitespace.
struct Caption {
  std::vector<std::string> tokens;

  std::string text() const;  // tokens joined by single spaces
  bool empty() const { return tokens.empty(); }

  friend bool operator==(const Caption&, const Caption&) = default;
};

/// Lowercase the string, drop the characters . , ; : ! ? " ( ) and split on
/// whitespace. Deterministic; identical raw strings yield identical tokens.
std::vector<std::string> tokenize(std::string_view raw);

struct ImageRecord {
  std::int64_t image_id = 0;
  Split split = Split::Train;
  std::vector<ObjectId> gt_objects;  // sorted, unique
  std::vector<Caption> captions;
};

struct Dataset {
  std::vector<ImageRecord> images;
  std::string lexicon_fingerprint;  // set when ground truth is merged

  const ImageRecord* find(std::int64_t image_id) const;
  std::size_t count(Split s) const;

  void rebuild_index();

 private:
  std::unordered_map<std::int64_t, std::size_t> index_;
};

/// Per-image ground-truth object sets resolved against a lexicon.
struct GroundTruth {
  std::map<std::int64_t, std::vector<ObjectId>> objects;  // sorted, unique
  std::string lexicon_fingerprint;
};

/// Load a Karpathy-style caption split file: a JSON document with an `images`
/// array of entries carrying `cocoid`, `split` and `sentences[].tokens`.
/// The `restval` portion of the standard split counts as training data.
Dataset load_karpathy(const std::string& path);

/// Load an MSCOCO instances file (`annotations` + `categories` arrays) and
/// resolve category names through the lexicon.
GroundTruth load_instances(const std::string& path, const Lexicon& lex);

/// Attach ground-truth object sets to the dataset. Images absent from the
/// ground truth keep empty sets.
void merge_ground_truth(Dataset& dataset, const GroundTruth& gt);

/// One augmented training caption with full provenance.
struct AugmentedRecord {
  std::int64_t image_id = 0;
  int caption_index = 0;
  Caption original;
  Caption simplified;
  Caption augmented;
  std::optional<ObjectId> anchor;    // o_i, kept as context
  std::optional<ObjectId> replaced;  // o_j, removed from the caption
  std::optional<ObjectId> sampled;   // o_k, substituted in
  std::vector<ObjectId> labels_original;   // sorted, unique
  std::vector<ObjectId> labels_augmented;  // sorted, unique
  bool used_augmented = false;
  std::string sampler;
  std::uint64_t seed = 0;

  friend bool operator==(const AugmentedRecord&, const AugmentedRecord&) = default;
};

/// Write records as UTF-8 JSON lines, one self-describing object per line.
/// `header` lines, when given, are emitted first prefixed with `# ` and are
/// skipped by read_augmented. Returns the number of records written.
std::size_t write_augmented(const std::vector<AugmentedRecord>& records,
                            const std::string& path,
                            const std::vector<std::string>& header = {});

std::vector<AugmentedRecord> read_augmented(const std::string& path);

/// Line-delimited generated captions for evaluation: {"image_id": .., "caption": ".."}.
struct GeneratedCaption {
  std::int64_t image_id = 0;
  Caption caption;
};

std::vector<GeneratedCaption> load_generated(const std::string& path);

}  // namespace capaug
