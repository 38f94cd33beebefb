#include "capaug/simplify.hpp"

#include <fstream>

#include "capaug/errors.hpp"

namespace capaug {

namespace detail {
// chunker_words.cpp
extern const char* const kDefaultDeterminers[];
extern const std::size_t kDefaultDeterminerCount;
extern const char* const kDefaultAdjectives[];
extern const std::size_t kDefaultAdjectiveCount;
}  // namespace detail

namespace {

std::unordered_set<std::string> load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open word list: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(line);
  }
  return words;
}

}  // namespace

ChunkerConfig ChunkerConfig::defaults() {
  ChunkerConfig cfg;
  cfg.determiners.insert(detail::kDefaultDeterminers,
                         detail::kDefaultDeterminers + detail::kDefaultDeterminerCount);
  cfg.adjectives.insert(detail::kDefaultAdjectives,
                        detail::kDefaultAdjectives + detail::kDefaultAdjectiveCount);
  cfg.adjective_suffixes = {"y", "ful", "ous", "ish", "ive", "al"};
  cfg.validate();
  return cfg;
}

ChunkerConfig ChunkerConfig::load(const std::string& adjectives_path,
                                  const std::string& determiners_path) {
  ChunkerConfig cfg = defaults();
  if (!adjectives_path.empty()) cfg.adjectives = load_word_list(adjectives_path);
  if (!determiners_path.empty()) cfg.determiners = load_word_list(determiners_path);
  cfg.validate();
  return cfg;
}

void ChunkerConfig::validate() const {
  for (const std::string& det : determiners) {
    if (adjectives.count(det)) {
      throw ValidationError("word \"" + det + "\" listed as both determiner and adjective");
    }
  }
}

bool ChunkerConfig::is_determiner(const std::string& token) const {
  return determiners.count(token) > 0;
}

bool ChunkerConfig::is_adjective(const std::string& token) const {
  if (is_determiner(token)) return false;
  if (adjectives.count(token)) return true;
  for (const std::string& suffix : adjective_suffixes) {
    // Short words ending in -y or -al are mostly not adjectives; require a
    // stem of at least three characters.
    if (token.size() >= suffix.size() + 3 && token.ends_with(suffix)) return true;
  }
  return false;
}

std::vector<NounPhrase> chunk_noun_phrases(std::span<const std::string> tokens,
                                           const Lexicon& lex,
                                           const ChunkerConfig& cfg) {
  std::vector<Mention> mentions = lex.match_mentions(tokens);
  std::vector<NounPhrase> phrases;
  phrases.reserve(mentions.size());

  int prev_end = 0;
  for (const Mention& mention : mentions) {
    NounPhrase np;
    np.head = mention;
    np.mods_begin = mention.start;

    // Walk left over modifier tokens: known adjectives freely, unknown
    // tokens (bare noun modifiers, participles) in runs of at most one.
    // Two unknowns in a row read as a clause boundary, not a modifier
    // chain. The walk never crosses the previous mention.
    int i = mention.start - 1;
    int unknown_run = 0;
    bool closed_by_determiner = false;
    while (i >= prev_end) {
      const std::string& tok = tokens[static_cast<std::size_t>(i)];
      if (cfg.is_determiner(tok)) {
        closed_by_determiner = true;
        break;
      }
      if (cfg.is_adjective(tok)) {
        unknown_run = 0;
        --i;
        continue;
      }
      if (++unknown_run > 1) break;
      --i;
    }

    if (closed_by_determiner) {
      // Everything between the determiner and the head counts as modifiers.
      np.determiner = i;
      np.mods_begin = i + 1;
    } else {
      // No determiner: keep only the adjacent run of known adjectives.
      int j = mention.start;
      while (j - 1 >= prev_end && cfg.is_adjective(tokens[static_cast<std::size_t>(j - 1)])) {
        --j;
      }
      np.mods_begin = j;
    }

    phrases.push_back(np);
    prev_end = mention.end;
  }
  return phrases;
}

std::string article_agree(const std::string& determiner, const std::string& head_first_token) {
  if (determiner != "a" && determiner != "an") return determiner;
  if (head_first_token.empty()) return determiner;
  switch (head_first_token.front()) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return "an";
    default:
      return "a";
  }
}

namespace {

Caption simplify_pass(const Caption& caption, const Lexicon& lex, const ChunkerConfig& cfg) {
  std::vector<NounPhrase> phrases = chunk_noun_phrases(caption.tokens, lex, cfg);

  Caption out;
  out.tokens.reserve(caption.tokens.size());
  std::size_t next = 0;  // index of the next phrase to emit
  std::size_t pos = 0;
  while (pos < caption.tokens.size()) {
    if (next < phrases.size()) {
      const NounPhrase& np = phrases[next];
      std::size_t begin =
          static_cast<std::size_t>(np.has_determiner() ? np.determiner : np.mods_begin);
      if (pos == begin) {
        const std::string& head_first = caption.tokens[static_cast<std::size_t>(np.head.start)];
        if (np.has_determiner()) {
          out.tokens.push_back(
              article_agree(caption.tokens[static_cast<std::size_t>(np.determiner)], head_first));
        }
        // Keep the surface form of the head: "a cute little boy" collapses
        // to "a boy", not to the class name.
        for (int t = np.head.start; t < np.head.end; ++t) {
          out.tokens.push_back(caption.tokens[static_cast<std::size_t>(t)]);
        }
        pos = static_cast<std::size_t>(np.head.end);
        ++next;
        continue;
      }
    }
    out.tokens.push_back(caption.tokens[pos]);
    ++pos;
  }
  return out;
}

}  // namespace

Caption simplify(const Caption& caption, const Lexicon& lex, const ChunkerConfig& cfg) {
  // Removing modifiers can butt a compound prefix against its head ("cell
  // <adj> phone" becomes "cell phone"), which changes the chunking of the
  // next pass. Iterate to the fixpoint; passes never lengthen the caption,
  // so this terminates.
  Caption current = caption;
  while (true) {
    Caption next = simplify_pass(current, lex, cfg);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace capaug
