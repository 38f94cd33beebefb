#include "capaug/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "capaug/errors.hpp"
#include "json.hpp"

namespace capaug {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  return "train";
}

std::optional<Split> split_from_name(std::string_view name) {
  if (name == "train") return Split::Train;
  if (name == "val") return Split::Val;
  if (name == "test") return Split::Test;
  return std::nullopt;
}

std::string Caption::text() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view raw) {
  static constexpr std::string_view kStrip = ".,;:!?\"()";
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  };
  for (char c : raw) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      flush();
      continue;
    }
    if (kStrip.find(c) != std::string_view::npos) continue;
    cur.push_back(static_cast<char>(std::tolower(uc)));
  }
  flush();
  return out;
}

const ImageRecord* Dataset::find(std::int64_t image_id) const {
  auto it = index_.find(image_id);
  if (it == index_.end()) return nullptr;
  return &images[it->second];
}

std::size_t Dataset::count(Split s) const {
  return static_cast<std::size_t>(
      std::count_if(images.begin(), images.end(),
                    [s](const ImageRecord& r) { return r.split == s; }));
}

void Dataset::rebuild_index() {
  index_.clear();
  index_.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto [it, inserted] = index_.emplace(images[i].image_id, i);
    if (!inserted) {
      throw ValidationError("duplicate image_id " + std::to_string(images[i].image_id));
    }
  }
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::vector<std::string> normalize_tokens(const json& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    for (auto& normalized : tokenize(t.get<std::string>())) {
      out.push_back(std::move(normalized));
    }
  }
  return out;
}

}  // namespace

Dataset load_karpathy(const std::string& path) {
  json doc = parse_file(path);
  if (!doc.is_object() || !doc.contains("images") || !doc["images"].is_array())
    throw ParseError(path + ": expected a top-level object with an \"images\" array");

  Dataset ds;
  ds.images.reserve(doc["images"].size());
  for (const auto& entry : doc["images"]) {
    ImageRecord rec;
    if (!entry.contains("cocoid"))
      throw ParseError(path + ": image entry missing \"cocoid\"");
    rec.image_id = entry["cocoid"].get<std::int64_t>();

    std::string tag = entry.value("split", "");
    if (tag == "restval") tag = "train";  // restval trains alongside train
    auto split = split_from_name(tag);
    if (!split)
      throw ParseError(path + ": unknown split tag \"" + tag + "\" for image " +
                       std::to_string(rec.image_id));
    rec.split = *split;

    if (entry.contains("sentences")) {
      for (const auto& sent : entry["sentences"]) {
        if (!sent.contains("tokens"))
          throw ParseError(path + ": sentence without \"tokens\" for image " +
                           std::to_string(rec.image_id));
        Caption cap{normalize_tokens(sent["tokens"])};
        if (!cap.empty()) rec.captions.push_back(std::move(cap));
      }
    }
    ds.images.push_back(std::move(rec));
  }
  ds.rebuild_index();
  return ds;
}

GroundTruth load_instances(const std::string& path, const Lexicon& lex) {
  json doc = parse_file(path);
  if (!doc.is_object() || !doc.contains("annotations") || !doc.contains("categories"))
    throw ParseError(path + ": expected \"annotations\" and \"categories\" arrays");

  std::unordered_map<std::int64_t, ObjectId> category_to_object;
  for (const auto& cat : doc["categories"]) {
    std::int64_t cat_id = cat.at("id").get<std::int64_t>();
    std::string name = cat.at("name").get<std::string>();
    auto object = lex.resolve(tokenize(name));
    if (!object)
      throw ValidationError(path + ": category \"" + name + "\" not found in lexicon");
    category_to_object[cat_id] = *object;
  }

  std::map<std::int64_t, std::set<ObjectId>> sets;
  for (const auto& ann : doc["annotations"]) {
    std::int64_t image_id = ann.at("image_id").get<std::int64_t>();
    std::int64_t cat_id = ann.at("category_id").get<std::int64_t>();
    auto it = category_to_object.find(cat_id);
    if (it == category_to_object.end())
      throw ParseError(path + ": annotation references unknown category_id " +
                       std::to_string(cat_id));
    sets[image_id].insert(it->second);
  }

  GroundTruth gt;
  gt.lexicon_fingerprint = lex.fingerprint();
  for (auto& [image_id, set] : sets) {
    gt.objects.emplace(image_id, std::vector<ObjectId>(set.begin(), set.end()));
  }
  return gt;
}

void merge_ground_truth(Dataset& dataset, const GroundTruth& gt) {
  for (ImageRecord& image : dataset.images) {
    auto it = gt.objects.find(image.image_id);
    image.gt_objects = it == gt.objects.end() ? std::vector<ObjectId>{} : it->second;
  }
  dataset.lexicon_fingerprint = gt.lexicon_fingerprint;
}

namespace {

ordered_json record_to_json(const AugmentedRecord& r) {
  auto opt = [](const std::optional<ObjectId>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json j;
  j["image_id"] = r.image_id;
  j["caption_index"] = r.caption_index;
  j["original"] = r.original.text();
  j["simplified"] = r.simplified.text();
  j["augmented"] = r.augmented.text();
  j["anchor"] = opt(r.anchor);
  j["replaced"] = opt(r.replaced);
  j["sampled"] = opt(r.sampled);
  j["labels_original"] = r.labels_original;
  j["labels_augmented"] = r.labels_augmented;
  j["used_augmented"] = r.used_augmented;
  j["sampler"] = r.sampler;
  j["seed"] = r.seed;
  return j;
}

AugmentedRecord record_from_json(const json& j) {
  auto opt = [&](const char* key) -> std::optional<ObjectId> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<ObjectId>();
  };
  AugmentedRecord r;
  r.image_id = j.at("image_id").get<std::int64_t>();
  r.caption_index = j.at("caption_index").get<int>();
  r.original.tokens = tokenize(j.at("original").get<std::string>());
  r.simplified.tokens = tokenize(j.at("simplified").get<std::string>());
  r.augmented.tokens = tokenize(j.at("augmented").get<std::string>());
  r.anchor = opt("anchor");
  r.replaced = opt("replaced");
  r.sampled = opt("sampled");
  r.labels_original = j.at("labels_original").get<std::vector<ObjectId>>();
  r.labels_augmented = j.at("labels_augmented").get<std::vector<ObjectId>>();
  r.used_augmented = j.at("used_augmented").get<bool>();
  r.sampler = j.at("sampler").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

}  // namespace

std::size_t write_augmented(const std::vector<AugmentedRecord>& records,
                            const std::string& path,
                            const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open file for writing: " + path);
  for (const std::string& line : header) out << "# " << line << '\n';
  std::size_t n = 0;
  for (const AugmentedRecord& r : records) {
    out << record_to_json(r).dump() << '\n';
    ++n;
    if (!out) throw IoError("write failure on " + path + " after " + std::to_string(n) + " records");
  }
  return n;
}

std::vector<AugmentedRecord> read_augmented(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<AugmentedRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      records.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": bad record: " + e.what());
    }
  }
  return records;
}

std::vector<GeneratedCaption> load_generated(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<GeneratedCaption> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      json j = json::parse(line);
      GeneratedCaption g;
      g.image_id = j.at("image_id").get<std::int64_t>();
      g.caption.tokens = tokenize(j.at("caption").get<std::string>());
      out.push_back(std::move(g));
    } catch (const json::exception& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": bad record: " + e.what());
    }
  }
  return out;
}

}  // namespace capaug
