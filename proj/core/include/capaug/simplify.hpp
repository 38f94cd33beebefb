#pragma once

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "capaug/corpus.hpp"
#include "capaug/lexicon.hpp"

namespace capaug {

/// Word lists driving the lexicon-anchored noun-phrase chunker.
///
/// The chunker stands in for a POS tagger: the only noun phrases that matter
/// are the ones headed by a lexicon object, so a deterministic scan around
/// each mention is enough and keeps the module testable.
struct ChunkerConfig {
  std::unordered_set<std::string> determiners;
  std::unordered_set<std::string> adjectives;
  std::vector<std::string> adjective_suffixes;

  /// Built-in lists: articles, demonstratives, possessives and number words
  /// as determiners; a large common-adjective list; suffixes
  /// -y -ful -ous -ish -ive -al.
  static ChunkerConfig defaults();

  /// Load word lists (one token per line, `#` comments) from files. Either
  /// path may be empty to keep the built-in list for that role.
  static ChunkerConfig load(const std::string& adjectives_path,
                            const std::string& determiners_path);

  bool is_determiner(const std::string& token) const;
  bool is_adjective(const std::string& token) const;

  void validate() const;  // determiners and adjectives must be disjoint
};

/// A noun phrase anchored on a lexicon mention: optional determiner token,
/// a possibly-empty modifier span, then the head mention.
struct NounPhrase {
  int determiner = -1;  // token index, -1 when absent
  int mods_begin = 0;   // [mods_begin, head.start) are modifier tokens
  Mention head;

  bool has_determiner() const { return determiner >= 0; }

  friend bool operator==(const NounPhrase&, const NounPhrase&) = default;
};

/// One NounPhrase per lexicon mention, left to right. From each mention the
/// scan extends left over modifier tokens and then absorbs at most one
/// determiner; it never crosses another mention. Tokens that are neither
/// determiners nor known adjectives count as modifiers only when the phrase
/// is eventually closed by a determiner; without one, only the adjacent run
/// of known adjectives is kept.
std::vector<NounPhrase> chunk_noun_phrases(std::span<const std::string> tokens,
                                           const Lexicon& lex,
                                           const ChunkerConfig& cfg);

/// Pick the article matching the head word: a/an by the vowel-initial
/// heuristic, all other determiners pass through.
std::string article_agree(const std::string& determiner, const std::string& head_first_token);

/// Collapse every object-headed noun phrase to its determiner (article
/// re-agreed) plus the head mention; all other tokens pass through.
Caption simplify(const Caption& caption, const Lexicon& lex, const ChunkerConfig& cfg);

}  // namespace capaug
