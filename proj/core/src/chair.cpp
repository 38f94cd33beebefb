#include "capaug/chair.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "capaug/errors.hpp"

namespace capaug {

std::string_view gt_mode_name(GtMode mode) {
  return mode == GtMode::Annotations ? "annotations" : "annotations+captions";
}

std::optional<GtMode> gt_mode_from_name(std::string_view name) {
  if (name == "annotations") return GtMode::Annotations;
  if (name == "annotations+captions") return GtMode::AnnotationsAndCaptions;
  return std::nullopt;
}

std::vector<ObjectId> gt_set(const ImageRecord& image, GtMode mode, const Lexicon& lex) {
  if (mode == GtMode::Annotations) return image.gt_objects;
  std::set<ObjectId> objects(image.gt_objects.begin(), image.gt_objects.end());
  for (const Caption& caption : image.captions) {
    for (const Mention& m : lex.match_mentions(caption.tokens)) objects.insert(m.object);
  }
  return {objects.begin(), objects.end()};
}

ChairReport evaluate(const std::vector<GeneratedCaption>& generated, const Dataset& dataset,
                     const Lexicon& lex, GtMode mode) {
  ChairReport report;
  report.mode = mode;

  std::int64_t flagged_sentences = 0;
  for (const GeneratedCaption& gen : generated) {
    const ImageRecord* image = dataset.find(gen.image_id);
    if (!image)
      throw ValidationError("generated caption references unknown image_id " +
                            std::to_string(gen.image_id));

    const std::vector<ObjectId> truth = gt_set(*image, mode, lex);

    std::set<ObjectId> mentioned;
    for (const Mention& m : lex.match_mentions(gen.caption.tokens)) mentioned.insert(m.object);

    std::int64_t hallucinated = 0;
    for (ObjectId object : mentioned) {
      if (!std::binary_search(truth.begin(), truth.end(), object)) ++hallucinated;
    }

    ++report.n_sentences;
    report.n_mentions += static_cast<std::int64_t>(mentioned.size());
    report.n_hallucinated += hallucinated;
    if (hallucinated > 0) ++flagged_sentences;

    PerImageChair& per = report.per_image[gen.image_id];
    per.mentions += static_cast<std::int64_t>(mentioned.size());
    per.hallucinated += hallucinated;
  }

  report.chairi = static_cast<double>(report.n_hallucinated) /
                  static_cast<double>(std::max<std::int64_t>(report.n_mentions, 1));
  report.chairs = report.n_sentences == 0
                      ? 0.0
                      : static_cast<double>(flagged_sentences) /
                            static_cast<double>(report.n_sentences);
  return report;
}

ChairReport evaluate_low_freq(const std::vector<GeneratedCaption>& generated,
                              const Dataset& dataset, const Lexicon& lex,
                              const PairSet& pairs, GtMode mode) {
  const std::vector<std::int64_t> ids = filter_images(dataset, pairs, std::nullopt);
  if (ids.empty())
    throw ValidationError("low-frequency pair set selects no images");

  std::unordered_set<std::int64_t> keep(ids.begin(), ids.end());
  std::vector<GeneratedCaption> subset;
  subset.reserve(generated.size());
  for (const GeneratedCaption& gen : generated) {
    if (keep.count(gen.image_id)) subset.push_back(gen);
  }
  ChairReport report = evaluate(subset, dataset, lex, mode);
  report.low_freq = ChairReport::LowFreqBreakdown{
      report.chairs, report.chairi, report.n_sentences,
      static_cast<std::int64_t>(report.per_image.size())};
  return report;
}

}  // namespace capaug
