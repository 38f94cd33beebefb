#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "capaug/cooccurrence.hpp"
#include "capaug/corpus.hpp"
#include "capaug/lexicon.hpp"

namespace capaug {

/// How an image's ground-truth object set is formed.
enum class GtMode {
  Annotations,             // instance annotations only
  AnnotationsAndCaptions,  // annotations plus reference-caption mentions
};

std::string_view gt_mode_name(GtMode mode);
std::optional<GtMode> gt_mode_from_name(std::string_view name);

std::vector<ObjectId> gt_set(const ImageRecord& image, GtMode mode, const Lexicon& lex);

struct PerImageChair {
  std::int64_t mentions = 0;
  std::int64_t hallucinated = 0;
};

/// CHAIR hallucination metrics. chairi counts hallucinated object mentions
/// over all mentions (deduplicated per sentence); chairs counts sentences
/// with at least one hallucinated mention over all sentences.
struct ChairReport {
  double chairs = 0.0;
  double chairi = 0.0;
  std::int64_t n_sentences = 0;
  std::int64_t n_mentions = 0;
  std::int64_t n_hallucinated = 0;
  std::map<std::int64_t, PerImageChair> per_image;
  GtMode mode = GtMode::AnnotationsAndCaptions;

  /// Same metrics restricted to a low-frequency-pair image subset.
  struct LowFreqBreakdown {
    double chairs = 0.0;
    double chairi = 0.0;
    std::int64_t n_sentences = 0;
    std::int64_t n_images = 0;
  };
  std::optional<LowFreqBreakdown> low_freq;
};

/// Score generated captions against the dataset's ground truth. Every
/// generated image_id must exist in the dataset.
ChairReport evaluate(const std::vector<GeneratedCaption>& generated, const Dataset& dataset,
                     const Lexicon& lex, GtMode mode);

/// evaluate() restricted to the images selected by the pair set. An empty
/// selection is an error.
ChairReport evaluate_low_freq(const std::vector<GeneratedCaption>& generated,
                              const Dataset& dataset, const Lexicon& lex,
                              const PairSet& pairs, GtMode mode);

}  // namespace capaug
