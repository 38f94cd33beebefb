#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace capaug {

/// Dense index of an object class, stable for the lifetime of a Lexicon.
using ObjectId = int;

/// A lowercase token sequence (one or more tokens).
using TokenSeq = std::vector<std::string>;

struct ObjectClass {
  ObjectId id = 0;
  TokenSeq canonical;                 // e.g. {"cell", "phone"}
  std::vector<TokenSeq> synonyms;     // includes canonical
};

/// One resolved object mention: tokens [start, end) of a caption equal one
/// synonym sequence of `object`.
struct Mention {
  ObjectId object = 0;
  int start = 0;
  int end = 0;  // exclusive

  friend bool operator==(const Mention&, const Mention&) = default;
};

/// The closed set of object classes with their surface forms.
///
/// File format: one class per line, `canonical: syn1, syn2, ...`, multi-word
/// synonyms space-separated inside a comma field, `#` starts a comment line.
/// Line order defines ObjectId assignment. The canonical name is always a
/// valid surface form whether or not the file repeats it in the synonym list.
class Lexicon {
 public:
  static Lexicon load(const std::string& path);
  static Lexicon parse(std::istream& in, const std::string& origin);

  /// Number of classes N.
  int size() const { return static_cast<int>(classes_.size()); }

  const std::vector<ObjectClass>& classes() const { return classes_; }

  const ObjectClass& object_class(ObjectId id) const;

  /// Canonical surface form of a class. Throws ValidationError when id is
  /// outside [0, N).
  const TokenSeq& canonical_name(ObjectId id) const;

  /// Exact lookup of one synonym sequence.
  std::optional<ObjectId> resolve(const TokenSeq& tokens) const;

  /// Greedy leftmost-longest, non-overlapping mention scan. Tokens must be
  /// lowercase; multi-word synonyms match as one mention.
  std::vector<Mention> match_mentions(std::span<const std::string> tokens) const;

  /// Content hash of the loaded class/synonym table, used to refuse mixing
  /// artifacts built against different lexicons.
  const std::string& fingerprint() const { return fingerprint_; }

 private:
  struct IndexEntry {
    TokenSeq tokens;
    ObjectId object;
  };

  std::vector<ObjectClass> classes_;
  // First token -> candidate synonym sequences, longest first.
  std::unordered_map<std::string, std::vector<IndexEntry>> index_;
  std::string fingerprint_;
};

}  // namespace capaug
