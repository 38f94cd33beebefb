#include "capaug/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "capaug/errors.hpp"

namespace capaug {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

TokenSeq split_tokens(const std::string& field) {
  TokenSeq out;
  std::istringstream iss(field);
  std::string tok;
  while (iss >> tok) out.push_back(to_lower(tok));
  return out;
}

std::string join(const TokenSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += seq[i];
  }
  return out;
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t h) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  return parse(in, path);
}

Lexicon Lexicon::parse(std::istream& in, const std::string& origin) {
  Lexicon lex;
  // synonym text -> owning class, for duplicate detection across classes
  std::unordered_map<std::string, ObjectId> seen;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;

    auto colon = body.find(':');
    std::string canonical_field = colon == std::string::npos ? body : body.substr(0, colon);
    std::string synonyms_field = colon == std::string::npos ? "" : body.substr(colon + 1);

    ObjectClass cls;
    cls.id = static_cast<ObjectId>(lex.classes_.size());
    cls.canonical = split_tokens(canonical_field);
    if (cls.canonical.empty()) {
      throw ValidationError(origin + ":" + std::to_string(line_no) +
                            ": empty class (no canonical name)");
    }

    cls.synonyms.push_back(cls.canonical);
    std::string field;
    std::istringstream fields(synonyms_field);
    while (std::getline(fields, field, ',')) {
      TokenSeq syn = split_tokens(field);
      if (syn.empty()) continue;
      if (syn == cls.canonical) continue;  // already present
      if (std::find(cls.synonyms.begin(), cls.synonyms.end(), syn) != cls.synonyms.end())
        continue;
      cls.synonyms.push_back(std::move(syn));
    }

    for (const TokenSeq& syn : cls.synonyms) {
      std::string key = join(syn);
      auto [it, inserted] = seen.emplace(key, cls.id);
      if (!inserted) {
        const auto& other = lex.classes_[it->second];
        throw ValidationError(origin + ":" + std::to_string(line_no) + ": synonym \"" + key +
                              "\" appears in classes \"" + join(other.canonical) + "\" and \"" +
                              join(cls.canonical) + "\"");
      }
    }

    lex.classes_.push_back(std::move(cls));
  }

  if (lex.classes_.empty())
    throw ValidationError(origin + ": lexicon defines no classes");

  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const ObjectClass& cls : lex.classes_) {
    hash = fnv1a(join(cls.canonical), hash);
    hash = fnv1a("\x1f", hash);
    for (const TokenSeq& syn : cls.synonyms) {
      hash = fnv1a(join(syn), hash);
      hash = fnv1a("\x1e", hash);
    }
    hash = fnv1a("\n", hash);
    for (const TokenSeq& syn : cls.synonyms) {
      auto& bucket = lex.index_[syn.front()];
      bucket.push_back({syn, cls.id});
    }
  }
  lex.fingerprint_ = hex64(hash);

  // Longest sequence first so the scan can take the first hit.
  for (auto& [first, bucket] : lex.index_) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const IndexEntry& a, const IndexEntry& b) {
                       return a.tokens.size() > b.tokens.size();
                     });
  }
  return lex;
}

const ObjectClass& Lexicon::object_class(ObjectId id) const {
  if (id < 0 || id >= size()) {
    throw ValidationError("object id " + std::to_string(id) + " out of range [0, " +
                          std::to_string(size()) + ")");
  }
  return classes_[static_cast<std::size_t>(id)];
}

const TokenSeq& Lexicon::canonical_name(ObjectId id) const {
  return object_class(id).canonical;
}

std::optional<ObjectId> Lexicon::resolve(const TokenSeq& tokens) const {
  if (tokens.empty()) return std::nullopt;
  auto it = index_.find(tokens.front());
  if (it == index_.end()) return std::nullopt;
  for (const IndexEntry& entry : it->second) {
    if (entry.tokens == tokens) return entry.object;
  }
  return std::nullopt;
}

std::vector<Mention> Lexicon::match_mentions(std::span<const std::string> tokens) const {
  std::vector<Mention> mentions;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    auto it = index_.find(tokens[pos]);
    if (it == index_.end()) {
      ++pos;
      continue;
    }
    bool matched = false;
    for (const IndexEntry& entry : it->second) {
      const std::size_t len = entry.tokens.size();
      if (pos + len > tokens.size()) continue;
      bool eq = true;
      for (std::size_t k = 1; k < len; ++k) {
        if (tokens[pos + k] != entry.tokens[k]) {
          eq = false;
          break;
        }
      }
      if (eq) {
        mentions.push_back({entry.object, static_cast<int>(pos), static_cast<int>(pos + len)});
        pos += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++pos;
  }
  return mentions;
}

}  // namespace capaug
