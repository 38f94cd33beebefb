#pragma once

// Hand-counted CHAIR fixture shared by the unit tests and the acceptance
// suite: ten images, twenty generated captions. Counted by hand against the
// shipped lexicon: 38 deduplicated mentions, 9 hallucinated, 8 of 20
// sentences flagged.

#include <string>
#include <vector>

#include "capaug/chair.hpp"
#include "capaug/corpus.hpp"
#include "helpers.hpp"

namespace chair_fixture {

using namespace capaug;

// Object ids in the shipped 80-class lexicon.
constexpr ObjectId kPerson = 0, kCar = 2, kTruck = 7, kBird = 14, kCat = 15, kDog = 16,
                   kHorse = 17, kElephant = 20, kFrisbee = 29, kBall = 32, kBowl = 45,
                   kApple = 47, kBroccoli = 50, kCarrot = 51, kPizza = 53, kChair = 56,
                   kTable = 60, kTv = 62, kLaptop = 63, kMouse = 64, kKeyboard = 66,
                   kClock = 74, kTeddy = 77;

/// Ten images, hand-built ground truth. Image 104 carries a reference
/// caption so the two gt modes differ there.
inline Dataset mini_dataset(const Lexicon& lex) {
  using test_helpers::make_dataset;
  using test_helpers::make_image;
  return make_dataset(
      {
          make_image(101, Split::Test, {kPerson, kDog}, {}),
          make_image(102, Split::Test, {kCat, kTable}, {}),
          make_image(103, Split::Test, {kPerson, kFrisbee}, {}),
          make_image(104, Split::Test, {}, {"a bird over the ocean"}),
          make_image(105, Split::Test, {kPizza}, {}),
          make_image(106, Split::Test, {kCar, kTruck}, {}),
          make_image(107, Split::Test, {kPerson, kHorse}, {}),
          make_image(108, Split::Test, {kBowl, kBroccoli, kCarrot}, {}),
          make_image(109, Split::Test, {kClock}, {}),
          make_image(110, Split::Test, {kLaptop, kKeyboard, kMouse}, {}),
      },
      lex);
}

inline std::vector<GeneratedCaption> generated20() {
  auto g = [](std::int64_t id, const std::string& text) {
    return GeneratedCaption{id, Caption{test_helpers::toks(text)}};
  };
  return {
      g(101, "a man walking his dog"),                    // 2 mentions, 0 bad
      g(101, "a man and a cat"),                          // 2, 1 (cat)
      g(102, "a cat on a table"),                         // 2, 0
      g(102, "a cat sitting on a chair"),                 // 2, 1 (chair)
      g(103, "a man holding a frisbee"),                  // 2, 0
      g(103, "a man throwing a ball to a dog"),           // 3, 2 (ball, dog)
      g(104, "sunset over the water"),                    // 0, 0
      g(104, "a bird flying at sunset"),                  // 1, 1 (bird; empty gt)
      g(105, "a pizza on a plate"),                       // 1, 0
      g(105, "a pizza pizza pizza"),                      // 1 after dedup, 0
      g(106, "a car parked next to a truck"),             // 2, 0
      g(106, "a red car on the street"),                  // 1, 0
      g(107, "a cowboy riding a horse"),                  // 2, 0
      g(107, "a man riding an elephant and a horse"),     // 3, 1 (elephant)
      g(108, "a bowl of broccoli and carrots"),           // 3, 0
      g(108, "a bowl of apples"),                         // 2, 1 (apple)
      g(109, "a clock on the beach"),                     // 1, 0
      g(109, "a clock and a teddy bear on the beach"),    // 2, 1 (teddy bear)
      g(110, "a laptop with a keyboard and a mouse"),     // 3, 0
      g(110, "a computer monitor and a computer mouse"),  // 3, 1 (tv via monitor)
  };
}

}  // namespace chair_fixture
