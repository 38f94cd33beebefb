#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "capaug/augment.hpp"
#include "capaug/chair.hpp"
#include "capaug/cooccurrence.hpp"
#include "capaug/corpus.hpp"
#include "capaug/lexicon.hpp"
#include "capaug/rng.hpp"
#include "capaug/sampler.hpp"
#include "capaug/simplify.hpp"

#ifndef CAPAUG_DATA_DIR
#define CAPAUG_DATA_DIR "."
#endif

namespace {

using namespace capaug;

const Lexicon& lexicon() {
  static Lexicon lex = Lexicon::load(std::string(CAPAUG_DATA_DIR) + "/coco_lexicon.txt");
  return lex;
}

const ChunkerConfig& chunker() {
  static ChunkerConfig cfg = ChunkerConfig::defaults();
  return cfg;
}

std::vector<Caption> sample_captions() {
  const std::vector<std::string> raw = {
      "a small black cat is sitting on top of an old table",
      "a man riding a skateboard down the side of a ramp",
      "a group of people standing around a kitchen with a refrigerator",
      "two dogs playing with a frisbee in a grassy field",
      "a woman holding a cute little baby next to a birthday cake",
      "a double decker bus driving down a busy city street",
      "a plate with a sandwich and a cup of coffee on a dining table",
      "an old clock mounted on the side of a brick building",
  };
  std::vector<Caption> captions;
  for (const auto& text : raw) captions.push_back(Caption{tokenize(text)});
  return captions;
}

Dataset synthetic_dataset(int n_images) {
  SplitRng rng(8080);
  const Lexicon& lex = lexicon();
  Dataset ds;
  for (int i = 0; i < n_images; ++i) {
    ImageRecord rec;
    rec.image_id = i;
    rec.split = Split::Train;
    std::set<ObjectId> gt;
    const auto k = 2 + rng.next_below(4);
    for (std::uint64_t c = 0; c < k; ++c)
      gt.insert(static_cast<ObjectId>(rng.next_below(lex.size())));
    rec.gt_objects.assign(gt.begin(), gt.end());
    rec.captions = sample_captions();
    rec.captions.resize(5);
    ds.images.push_back(std::move(rec));
  }
  ds.lexicon_fingerprint = lex.fingerprint();
  ds.rebuild_index();
  return ds;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string raw = "A small black cat is sitting on top of an old table.";
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(raw));
}
BENCHMARK(BM_Tokenize);

void BM_MatchMentions(benchmark::State& state) {
  const auto captions = sample_captions();
  const Lexicon& lex = lexicon();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lex.match_mentions(captions[i % captions.size()].tokens));
    ++i;
  }
}
BENCHMARK(BM_MatchMentions);

void BM_Simplify(benchmark::State& state) {
  const auto captions = sample_captions();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplify(captions[i % captions.size()], lexicon(), chunker()));
    ++i;
  }
}
BENCHMARK(BM_Simplify);

void BM_SamplerDraw(benchmark::State& state) {
  const auto kind = static_cast<SamplerKind>(state.range(0));
  CooccurrenceMatrix m(80, "");
  SplitRng init(1);
  for (ObjectId i = 0; i < 80; ++i)
    for (ObjectId j = i + 1; j < 80; ++j)
      if (auto v = init.next_below(50)) m.add_pair(i, j, static_cast<std::int64_t>(v));
  SamplerState sampler(kind, m, 1);
  CandidateSet cs = candidate_set({0, 16}, 0, 16, 80);
  SplitRng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(cs, rng));
}
BENCHMARK(BM_SamplerDraw)->Arg(0)->Arg(1)->Arg(2);

void BM_CooccurrenceBuild(benchmark::State& state) {
  Dataset ds = synthetic_dataset(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_cooccurrence(ds, CoocSource::Annotations, Split::Train, lexicon()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CooccurrenceBuild)->Arg(1000)->Arg(10000);

void BM_AugmentRecord(benchmark::State& state) {
  Dataset ds = synthetic_dataset(1);
  CooccurrenceMatrix cooc = build_cooccurrence(ds, CoocSource::Annotations, Split::Train,
                                               lexicon());
  AugmentPolicy policy;
  policy.sampler = SamplerKind::InverseMultinomial;
  policy.seed = 3;
  SamplerState sampler(policy.sampler, cooc, policy.smoothing);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        augment_record(ds.images[0], 0, policy, sampler, lexicon(), chunker()));
  }
}
BENCHMARK(BM_AugmentRecord);

void BM_ChairEvaluate(benchmark::State& state) {
  Dataset ds = synthetic_dataset(200);
  std::vector<GeneratedCaption> generated;
  const auto captions = sample_captions();
  for (int i = 0; i < 200; ++i)
    generated.push_back({i, captions[static_cast<std::size_t>(i) % captions.size()]});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluate(generated, ds, lexicon(), GtMode::AnnotationsAndCaptions));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_ChairEvaluate);

}  // namespace

BENCHMARK_MAIN();
