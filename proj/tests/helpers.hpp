#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "capaug/cooccurrence.hpp"
#include "capaug/corpus.hpp"
#include "capaug/lexicon.hpp"
#include "capaug/rng.hpp"

namespace test_helpers {

using namespace capaug;

inline std::vector<std::string> toks(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream iss(text);
  std::string t;
  while (iss >> t) out.push_back(t);
  return out;
}

inline Lexicon make_lexicon(const std::vector<std::string>& lines) {
  std::string joined;
  for (const auto& line : lines) joined += line + "\n";
  std::istringstream in(joined);
  return Lexicon::parse(in, "<test>");
}

/// Small pet-themed lexicon used across the unit tests.
inline Lexicon pet_lexicon() {
  return make_lexicon({
      "person: man, men, woman, boy, girl",
      "cat: cats, kitten",
      "dog: dogs, puppy",
      "dining table: table, tables",
      "traffic light: traffic lights",
      "cell phone: phone, phones",
      "elephant: elephants",
      "clock: clocks",
  });
}

/// Exhaustive-span oracle for mention matching: enumerate every matching
/// (start, length) span, then repeatedly keep the leftmost (longest on ties)
/// span that does not overlap anything already kept.
inline std::vector<Mention> oracle_mentions(const std::vector<std::string>& tokens,
                                            const Lexicon& lex) {
  struct Span {
    int start, end;
    ObjectId object;
  };
  std::vector<Span> spans;
  for (int start = 0; start < static_cast<int>(tokens.size()); ++start) {
    for (int end = start + 1; end <= static_cast<int>(tokens.size()); ++end) {
      TokenSeq seq(tokens.begin() + start, tokens.begin() + end);
      for (const ObjectClass& cls : lex.classes()) {
        for (const TokenSeq& syn : cls.synonyms) {
          if (syn == seq) spans.push_back({start, end, cls.id});
        }
      }
    }
  }
  std::vector<Mention> kept;
  int cursor = 0;
  while (true) {
    const Span* best = nullptr;
    for (const Span& s : spans) {
      if (s.start < cursor) continue;
      if (!best || s.start < best->start ||
          (s.start == best->start && s.end > best->end)) {
        best = &s;
      }
    }
    if (!best) break;
    kept.push_back({best->object, best->start, best->end});
    cursor = best->end;
  }
  return kept;
}

/// Nested-loop oracle for the co-occurrence build.
inline CooccurrenceMatrix oracle_cooccurrence(const Dataset& ds, const Lexicon& lex,
                                              std::optional<Split> split) {
  CooccurrenceMatrix m(lex.size(), lex.fingerprint());
  for (const ImageRecord& image : ds.images) {
    if (split && image.split != *split) continue;
    for (std::size_t a = 0; a < image.gt_objects.size(); ++a)
      for (std::size_t b = 0; b < image.gt_objects.size(); ++b)
        if (a < b) m.add_pair(image.gt_objects[a], image.gt_objects[b]);
  }
  return m;
}

inline ImageRecord make_image(std::int64_t id, Split split, std::vector<ObjectId> gt,
                              std::vector<std::string> captions) {
  ImageRecord rec;
  rec.image_id = id;
  rec.split = split;
  std::set<ObjectId> unique(gt.begin(), gt.end());
  rec.gt_objects.assign(unique.begin(), unique.end());
  for (const std::string& text : captions) rec.captions.push_back(Caption{toks(text)});
  return rec;
}

inline Dataset make_dataset(std::vector<ImageRecord> images, const Lexicon& lex) {
  Dataset ds;
  ds.images = std::move(images);
  ds.lexicon_fingerprint = lex.fingerprint();
  ds.rebuild_index();
  return ds;
}

/// Arbitrary but well-formed augmented record for round-trip checks.
inline AugmentedRecord random_record(SplitRng& rng) {
  const std::vector<std::string> words = {"a",     "cat",  "dog",   "sits", "on",
                                          "table", "with", "clock", "red",  "man"};
  auto random_caption = [&] {
    Caption c;
    const auto len = 1 + rng.next_below(8);
    for (std::uint64_t i = 0; i < len; ++i)
      c.tokens.push_back(words[rng.next_below(words.size())]);
    return c;
  };
  auto random_labels = [&] {
    std::set<ObjectId> set;
    const auto len = rng.next_below(5);
    for (std::uint64_t i = 0; i < len; ++i)
      set.insert(static_cast<ObjectId>(rng.next_below(80)));
    return std::vector<ObjectId>(set.begin(), set.end());
  };

  AugmentedRecord r;
  r.image_id = static_cast<std::int64_t>(rng.next_below(1000000));
  r.caption_index = static_cast<int>(rng.next_below(5));
  r.original = random_caption();
  r.simplified = random_caption();
  r.augmented = random_caption();
  if (rng.next_bernoulli(0.7)) {
    r.anchor = static_cast<ObjectId>(rng.next_below(80));
    r.replaced = static_cast<ObjectId>(rng.next_below(80));
    r.sampled = static_cast<ObjectId>(rng.next_below(80));
  }
  r.labels_original = random_labels();
  r.labels_augmented = random_labels();
  r.used_augmented = rng.next_bernoulli(0.5);
  r.sampler = std::vector<std::string>{"uniform", "inverse", "occ"}[rng.next_below(3)];
  r.seed = rng.next_u64();
  return r;
}

/// Unique scratch path under the system temp dir, removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& stem) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             (stem + "." + std::to_string(::getpid()) + "." + std::to_string(counter++)))
                .string();
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::string& path() const { return path_; }

  void write(const std::string& content) const {
    std::ofstream out(path_);
    out << content;
  }

  std::string read() const {
    std::ifstream in(path_);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  std::string path_;
};

}  // namespace test_helpers
