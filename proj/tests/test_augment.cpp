#include <cmath>
#include <map>

#include "capaug/augment.hpp"
#include "capaug/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace capaug;
using namespace test_helpers;

#ifndef CAPAUG_DATA_DIR
#define CAPAUG_DATA_DIR "."
#endif

namespace {

// cat(0), table(1), clock(2): one forced candidate when a caption holds
// both cat and table.
Lexicon three_lexicon() {
  return make_lexicon({"cat: cats", "dining table: table", "clock: clocks"});
}

AugmentPolicy policy_with(SamplerKind kind, std::uint64_t seed, double coin_p = 0.5) {
  AugmentPolicy p;
  p.sampler = kind;
  p.seed = seed;
  p.coin_p = coin_p;
  return p;
}

}  // namespace

TEST_CASE("anchor/target selection") {
  Lexicon lex = pet_lexicon();

  SUBCASE("no mentions yields nothing") {
    SplitRng rng(1);
    CHECK_FALSE(select_anchor_target({}, rng).has_value());
  }
  SUBCASE("single class pairs with itself") {
    SplitRng rng(1);
    auto mentions = lex.match_mentions(toks("a dog"));
    auto pair = select_anchor_target(mentions, rng);
    REQUIRE(pair.has_value());
    CHECK(pair->first == pair->second);
  }
  SUBCASE("two classes appear in both orders about equally often") {
    auto mentions = lex.match_mentions(toks("a cat on a table"));
    std::map<std::pair<ObjectId, ObjectId>, int> orders;
    SplitRng rng(20240810);
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      auto pair = select_anchor_target(mentions, rng);
      REQUIRE(pair.has_value());
      CHECK(pair->first != pair->second);
      orders[*pair]++;
    }
    REQUIRE(orders.size() == 2);
    for (const auto& [order, count] : orders) {
      CHECK(std::abs(static_cast<double>(count) / trials - 0.5) < 0.02);
    }
  }
}

TEST_CASE("replace_object rewrites every target mention") {
  Lexicon lex = pet_lexicon();
  // ids: person=0, cat=1, dog=2, dining table=3, ..., elephant=6, clock=7

  SUBCASE("the one-mention swap") {
    Caption c{toks("a person is playing with a dog")};
    Caption got = replace_object(c, 0, 1, lex);
    CHECK(got.text() == "a cat is playing with a dog");
  }
  SUBCASE("the flagship person-to-fork swap on the shipped lexicon") {
    Lexicon coco = Lexicon::load(std::string(CAPAUG_DATA_DIR) + "/coco_lexicon.txt");
    Caption c{toks("a person is playing with a dog")};
    Caption got = replace_object(c, 0, 42, coco);  // person -> fork
    CHECK(got.text() == "a fork is playing with a dog");
  }
  SUBCASE("all mentions of the class are replaced") {
    Caption c{toks("a cat and a cat")};
    Caption got = replace_object(c, 1, 7, lex);
    CHECK(got.text() == "a clock and a clock");
  }
  SUBCASE("articles re-agree around the new word") {
    Caption c{toks("a table")};
    CHECK(replace_object(c, 3, 6, lex).text() == "an elephant");
    Caption d{toks("an elephant")};
    CHECK(replace_object(d, 6, 2, lex).text() == "a dog");
  }
  SUBCASE("multi-word replacements splice in whole") {
    Caption c{toks("a dog barking")};
    CHECK(replace_object(c, 2, 5, lex).text() == "a cell phone barking");
  }
  SUBCASE("missing target is a contract violation") {
    Caption c{toks("a dog")};
    CHECK_THROWS_AS(replace_object(c, 1, 7, lex), ValidationError);
  }
}

TEST_CASE("augment_record pipeline") {
  Lexicon lex = three_lexicon();
  CooccurrenceMatrix cooc(lex.size(), lex.fingerprint());
  cooc.add_pair(0, 1, 4);
  ChunkerConfig cfg = ChunkerConfig::defaults();
  ImageRecord image =
      make_image(10, Split::Train, {0, 1}, {"a small cat is sitting on an old table"});

  SUBCASE("the only candidate is forced and labels follow") {
    SamplerState state(SamplerKind::Uniform, cooc);
    AugmentOutcome outcome;
    AugmentedRecord rec = augment_record(image, 0, policy_with(SamplerKind::Uniform, 7),
                                         state, lex, cfg, &outcome);
    CHECK(outcome == AugmentOutcome::Replaced);
    CHECK(rec.simplified.text() == "a cat is sitting on a table");
    REQUIRE(rec.sampled.has_value());
    CHECK(*rec.sampled == 2);  // clock, the only class outside the sentence
    CHECK(rec.labels_original == std::vector<ObjectId>{0, 1});
    bool replaced_cat = *rec.replaced == 0;
    if (replaced_cat) {
      CHECK(rec.augmented.text() == "a clock is sitting on a table");
      CHECK(rec.labels_augmented == std::vector<ObjectId>{1, 2});
    } else {
      CHECK(rec.augmented.text() == "a cat is sitting on a clock");
      CHECK(rec.labels_augmented == std::vector<ObjectId>{0, 2});
    }
  }

  SUBCASE("zero-mention captions pass through") {
    ImageRecord plain = make_image(11, Split::Train, {}, {"sunset over water"});
    SamplerState state(SamplerKind::Uniform, cooc);
    AugmentOutcome outcome;
    AugmentedRecord rec = augment_record(plain, 0, policy_with(SamplerKind::Uniform, 7),
                                         state, lex, cfg, &outcome);
    CHECK(outcome == AugmentOutcome::NoMentions);
    CHECK_FALSE(rec.replaced.has_value());
    CHECK(rec.augmented == rec.simplified);
    CHECK(rec.labels_augmented == rec.labels_original);
  }

  SUBCASE("sentence containing every class passes through with a counter") {
    Lexicon two = make_lexicon({"cat", "dog"});
    CooccurrenceMatrix m2(2, two.fingerprint());
    ImageRecord full = make_image(12, Split::Train, {0, 1}, {"a cat and a dog"});
    SamplerState state(SamplerKind::Uniform, m2);
    AugmentOutcome outcome;
    AugmentedRecord rec = augment_record(full, 0, policy_with(SamplerKind::Uniform, 7),
                                         state, two, ChunkerConfig::defaults(), &outcome);
    CHECK(outcome == AugmentOutcome::NoCandidates);
    CHECK_FALSE(rec.sampled.has_value());
    CHECK(rec.augmented == rec.simplified);
  }

  SUBCASE("caption index out of range is rejected") {
    SamplerState state(SamplerKind::Uniform, cooc);
    CHECK_THROWS_AS(
        augment_record(image, 5, policy_with(SamplerKind::Uniform, 7), state, lex, cfg),
        ValidationError);
  }

  SUBCASE("disabling simplification keeps the original text") {
    SamplerState state(SamplerKind::Uniform, cooc);
    AugmentPolicy p = policy_with(SamplerKind::Uniform, 7);
    p.simplify_enabled = false;
    AugmentedRecord rec = augment_record(image, 0, p, state, lex, cfg);
    CHECK(rec.simplified == rec.original);
  }

  SUBCASE("coin extremes pin used_augmented") {
    SamplerState state(SamplerKind::Uniform, cooc);
    AugmentedRecord heads =
        augment_record(image, 0, policy_with(SamplerKind::Uniform, 7, 1.0), state, lex, cfg);
    CHECK(heads.used_augmented);
    AugmentedRecord tails =
        augment_record(image, 0, policy_with(SamplerKind::Uniform, 7, 0.0), state, lex, cfg);
    CHECK_FALSE(tails.used_augmented);
    // coin=false leaves original as the effective caption and labels intact
    CHECK(tails.labels_original == std::vector<ObjectId>{0, 1});
  }
}

TEST_CASE("single-object sentences use uniform weights and anchor == target") {
  Lexicon lex = three_lexicon();
  CooccurrenceMatrix cooc(lex.size(), lex.fingerprint());
  cooc.add_pair(0, 1, 1000);  // would dominate inverse weights if it were used
  ImageRecord image = make_image(13, Split::Train, {0}, {"a cat"});
  ChunkerConfig cfg = ChunkerConfig::defaults();

  SamplerState state(SamplerKind::InverseMultinomial, cooc);
  std::map<ObjectId, int> histogram;
  for (int seed = 0; seed < 4000; ++seed) {
    AugmentedRecord rec = augment_record(
        image, 0, policy_with(SamplerKind::InverseMultinomial, seed), state, lex, cfg);
    REQUIRE(rec.anchor.has_value());
    CHECK(*rec.anchor == *rec.replaced);
    histogram[*rec.sampled]++;
  }
  // candidates {table, clock} drawn uniformly despite the skewed matrix
  const double p_table = histogram[1] / 4000.0;
  CHECK(std::abs(p_table - 0.5) < 0.05);
}

TEST_CASE("label consistency holds across random corpora") {
  Lexicon lex = pet_lexicon();
  ChunkerConfig cfg = ChunkerConfig::defaults();
  CooccurrenceMatrix cooc(lex.size(), lex.fingerprint());
  SplitRng rng(31);
  const std::vector<std::string> caps = {
      "a cat on a table",       "a man and his dog", "sunset over water",
      "an elephant and a cat",  "a clock",           "a man with a phone",
  };
  for (int trial = 0; trial < 500; ++trial) {
    ImageRecord image = make_image(
        trial, Split::Train,
        {static_cast<ObjectId>(rng.next_below(8)), static_cast<ObjectId>(rng.next_below(8))},
        {caps[rng.next_below(caps.size())]});
    SamplerState state(SamplerKind::Uniform, cooc);
    AugmentedRecord rec = augment_record(
        image, 0, policy_with(SamplerKind::Uniform, rng.next_u64()), state, lex, cfg);
    if (rec.replaced.has_value()) {
      std::set<ObjectId> expected(rec.labels_original.begin(), rec.labels_original.end());
      expected.erase(*rec.replaced);
      expected.insert(*rec.sampled);
      CHECK(rec.labels_augmented == std::vector<ObjectId>(expected.begin(), expected.end()));

      // the augmented caption mentions the sampled class and drops the target
      std::set<ObjectId> mentioned;
      for (const Mention& m : lex.match_mentions(rec.augmented.tokens))
        mentioned.insert(m.object);
      CHECK(mentioned.count(*rec.sampled) == 1);
      CHECK(mentioned.count(*rec.replaced) == 0);
    } else {
      CHECK(rec.labels_augmented == rec.labels_original);
    }
  }
}

TEST_CASE("augment_dataset emits one record per caption in stable order") {
  Lexicon lex = pet_lexicon();
  ChunkerConfig cfg = ChunkerConfig::defaults();
  CooccurrenceMatrix cooc(lex.size(), lex.fingerprint());
  Dataset ds = make_dataset(
      {make_image(5, Split::Train, {1, 3}, {"a cat", "a cat on a table", "hello", "a dog", "x"}),
       make_image(2, Split::Val, {0}, {"a man"}),
       make_image(9, Split::Train, {}, {"a phone"})},
      lex);

  AugmentResult result = augment_dataset(ds, policy_with(SamplerKind::Uniform, 11), cooc, lex, cfg);
  REQUIRE(result.records.size() == 6);  // five captions + one, val excluded
  CHECK(result.records[0].image_id == 5);
  CHECK(result.records[4].image_id == 5);
  CHECK(result.records[5].image_id == 9);
  for (int i = 0; i < 5; ++i) CHECK(result.records[static_cast<std::size_t>(i)].caption_index == i);
  CHECK(result.trace.empty());  // trace only for the updating kind

  SUBCASE("same seed reproduces the records exactly") {
    AugmentResult again =
        augment_dataset(ds, policy_with(SamplerKind::Uniform, 11), cooc, lex, cfg);
    CHECK(again.records == result.records);
  }
  SUBCASE("a different seed changes something") {
    AugmentResult other =
        augment_dataset(ds, policy_with(SamplerKind::Uniform, 12), cooc, lex, cfg);
    CHECK(other.records != result.records);
  }
}

TEST_CASE("coin statistics match coin_p over many records") {
  Lexicon lex = pet_lexicon();
  ChunkerConfig cfg = ChunkerConfig::defaults();
  CooccurrenceMatrix cooc(lex.size(), lex.fingerprint());
  std::vector<ImageRecord> images;
  for (int i = 0; i < 2500; ++i)
    images.push_back(make_image(i, Split::Train, {1, 3},
                                {"a cat on a table", "a dog", "a man", "a clock"}));
  Dataset ds = make_dataset(std::move(images), lex);

  AugmentResult result =
      augment_dataset(ds, policy_with(SamplerKind::Uniform, 99, 0.3), cooc, lex, cfg);
  REQUIRE(result.records.size() == 10000);
  std::int64_t used = 0;
  for (const auto& rec : result.records) used += rec.used_augmented ? 1 : 0;
  const double fraction = static_cast<double>(used) / static_cast<double>(result.records.size());
  CHECK(std::abs(fraction - 0.3) < 0.02);
}

TEST_CASE("occ augmentation traces uniformity and flattens a skewed corpus") {
  // Zipf-skewed synthetic corpus over 10 classes.
  std::vector<std::string> lines;
  const std::vector<std::string> names = {"apple", "ball",  "cat",  "dog",   "egg",
                                          "fish",  "grape", "hat",  "izard", "jug"};
  for (const auto& n : names) lines.push_back(n);
  Lexicon lex = make_lexicon(lines);
  ChunkerConfig cfg = ChunkerConfig::defaults();

  std::vector<std::pair<ObjectId, ObjectId>> pairs;
  for (ObjectId i = 0; i < 10; ++i)
    for (ObjectId j = i + 1; j < 10; ++j) pairs.emplace_back(i, j);

  SplitRng gen(505);
  std::vector<ImageRecord> images;
  for (int i = 0; i < 600; ++i) {
    const auto r = static_cast<std::size_t>(static_cast<double>(pairs.size()) *
                                            std::pow(gen.next_double(), 3.0));
    const auto [a, b] = pairs[std::min(r, pairs.size() - 1)];
    images.push_back(make_image(i, Split::Train, {a, b},
                                {"a " + names[static_cast<std::size_t>(a)] + " and a " +
                                 names[static_cast<std::size_t>(b)]}));
  }
  Dataset ds = make_dataset(std::move(images), lex);
  CooccurrenceMatrix cooc = build_cooccurrence(ds, CoocSource::Annotations, Split::Train, lex);

  AugmentResult result =
      augment_dataset(ds, policy_with(SamplerKind::CooccurrenceUpdating, 7), cooc, lex, cfg);
  REQUIRE(result.records.size() == 600);
  REQUIRE(result.trace.size() >= 2);
  CHECK(result.trace.front().step == 0);
  CHECK(result.trace.back().step == 600);
  CHECK(result.trace.back().cv < result.trace.front().cv);
}
