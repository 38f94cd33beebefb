// capaug command-line front end: cooc, simplify, augment, chair, report.
//
// Precedence for every setting: command-line flag, then config-file key
// (plain `key = value` lines, named after the long flag), then the built-in
// default. The resolved configuration is echoed to stderr and, where the
// output format has room for comments, into the output file header.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capaug/augment.hpp"
#include "capaug/chair.hpp"
#include "capaug/cooccurrence.hpp"
#include "capaug/corpus.hpp"
#include "capaug/errors.hpp"
#include "capaug/lexicon.hpp"
#include "capaug/sampler.hpp"
#include "capaug/simplify.hpp"
#include "json.hpp"

namespace {

using namespace capaug;
using nlohmann::ordered_json;

struct ConfigFile {
  std::map<std::string, std::string> values;

  static ConfigFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    ConfigFile cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto strip = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
      };
      std::string body = strip(line);
      if (body.empty() || body[0] == '#') continue;
      auto eq = body.find('=');
      if (eq == std::string::npos)
        throw ParseError(path + ":" + std::to_string(line_no) + ": expected key = value");
      cfg.values[strip(body.substr(0, eq))] = strip(body.substr(eq + 1));
    }
    return cfg;
  }

  bool has(const std::string& key) const { return values.count(key) > 0; }

  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }

  template <typename T>
  T get_num(const std::string& key, T fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::istringstream ss(it->second);
    T v;
    if (!(ss >> v)) throw ParseError("config key " + key + ": bad value \"" + it->second + "\"");
    return v;
  }
};

// The config file must be known before option defaults are installed, so
// scan argv for --config ahead of CLI11.
ConfigFile preload_config(int argc, char** argv) {
  for (int i = 1; i < argc - 1; ++i) {
    std::string arg = argv[i];
    if (arg == "--config") return ConfigFile::load(argv[i + 1]);
    if (arg.rfind("--config=", 0) == 0) return ConfigFile::load(arg.substr(9));
  }
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--config=", 0) == 0) return ConfigFile::load(arg.substr(9));
  }
  return {};
}

std::vector<std::string> echo_config(const std::string& command,
                                     const std::vector<std::pair<std::string, std::string>>& kv) {
  std::vector<std::string> lines;
  lines.push_back("capaug " + command);
  for (const auto& [key, value] : kv) lines.push_back(key + " = " + value);
  for (const std::string& line : lines) std::cerr << "# " << line << '\n';
  return lines;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Dataset load_dataset(const std::string& dataset_path, const std::string& instances_path,
                     const Lexicon& lex) {
  Dataset ds = load_karpathy(dataset_path);
  if (!instances_path.empty()) {
    merge_ground_truth(ds, load_instances(instances_path, lex));
  }
  return ds;
}

// ---------------------------------------------------------------- cooc ----

struct CoocArgs {
  std::string dataset, instances, lexicon, out;
  std::string source = "annotations";
  std::string split = "train";
  int threads = 1;
};

int run_cooc(const CoocArgs& a) {
  Lexicon lex = Lexicon::load(a.lexicon);
  Dataset ds = load_dataset(a.dataset, a.instances, lex);

  CoocSource source;
  if (a.source == "annotations") {
    source = CoocSource::Annotations;
  } else if (a.source == "captions") {
    source = CoocSource::Captions;
  } else {
    throw ValidationError("unknown co-occurrence source \"" + a.source + "\"");
  }

  std::optional<Split> split;
  if (a.split != "all") {
    split = split_from_name(a.split);
    if (!split) throw ValidationError("unknown split \"" + a.split + "\"");
  }

  CooccurrenceMatrix m = build_cooccurrence(ds, source, split, lex, a.threads);
  m.save(a.out);

  echo_config("cooc", {{"dataset", a.dataset},
                       {"instances", a.instances},
                       {"lexicon", a.lexicon},
                       {"source", a.source},
                       {"split", a.split},
                       {"threads", std::to_string(a.threads)},
                       {"out", a.out},
                       {"lexicon-fingerprint", lex.fingerprint()}});
  return 0;
}

// ------------------------------------------------------------ simplify ----

struct SimplifyArgs {
  std::string in, out, lexicon, adjectives, determiners;
};

int run_simplify(const SimplifyArgs& a) {
  Lexicon lex = Lexicon::load(a.lexicon);
  ChunkerConfig cfg = ChunkerConfig::load(a.adjectives, a.determiners);

  std::ifstream in(a.in);
  if (!in) throw IoError("cannot open file: " + a.in);
  std::ofstream out(a.out);
  if (!out) throw IoError("cannot open file for writing: " + a.out);

  std::string line;
  while (std::getline(in, line)) {
    Caption caption{tokenize(line)};
    out << simplify(caption, lex, cfg).text() << '\n';
  }

  echo_config("simplify", {{"in", a.in},
                           {"out", a.out},
                           {"lexicon", a.lexicon},
                           {"adjectives", a.adjectives.empty() ? "<built-in>" : a.adjectives},
                           {"determiners", a.determiners.empty() ? "<built-in>" : a.determiners},
                           {"lexicon-fingerprint", lex.fingerprint()}});
  return 0;
}

// ------------------------------------------------------------- augment ----

struct AugmentArgs {
  std::string dataset, instances, cooc, out, trace, lexicon, adjectives, determiners;
  std::string sampler = "uniform";
  double coin_p = 0.5;
  bool no_simplify = false;
  bool no_exclusion = false;
  int smoothing = 1;
  std::uint64_t seed = 0;
  int threads = 1;
};

int run_augment(const AugmentArgs& a) {
  Lexicon lex = Lexicon::load(a.lexicon);
  ChunkerConfig cfg = ChunkerConfig::load(a.adjectives, a.determiners);
  Dataset ds = load_dataset(a.dataset, a.instances, lex);
  CooccurrenceMatrix cooc = CooccurrenceMatrix::load(a.cooc);

  AugmentPolicy policy;
  auto kind = sampler_from_name(a.sampler);
  if (!kind) throw ValidationError("unknown sampler \"" + a.sampler + "\"");
  policy.sampler = *kind;
  policy.coin_p = a.coin_p;
  policy.simplify_enabled = !a.no_simplify;
  policy.exclude_sentence_objects = !a.no_exclusion;
  policy.smoothing = a.smoothing;
  policy.seed = a.seed;
  if (policy.coin_p < 0.0 || policy.coin_p > 1.0)
    throw ValidationError("--coin-p must lie in [0, 1]");

  AugmentResult result = augment_dataset(ds, policy, cooc, lex, cfg);

  // Output paths stay out of the header so identical configurations yield
  // byte-identical files wherever they are written.
  std::vector<std::string> header =
      echo_config("augment", {{"dataset", a.dataset},
                              {"instances", a.instances},
                              {"cooc", a.cooc},
                              {"sampler", a.sampler},
                              {"coin-p", format_double(a.coin_p)},
                              {"simplify", a.no_simplify ? "off" : "on"},
                              {"exclusion", a.no_exclusion ? "off" : "on"},
                              {"smoothing", std::to_string(a.smoothing)},
                              {"seed", std::to_string(a.seed)},
                              {"lexicon-fingerprint", lex.fingerprint()}});

  write_augmented(result.records, a.out, header);

  if (!a.trace.empty()) {
    std::ofstream trace(a.trace);
    if (!trace) throw IoError("cannot open file for writing: " + a.trace);
    for (const std::string& line : header) trace << "# " << line << '\n';
    for (const TracePoint& point : result.trace) {
      trace << point.step << ' ' << format_double(point.cv) << ' '
            << format_double(point.row_entropy_mean) << '\n';
    }
  }

  std::cerr << "# records = " << result.records.size()
            << ", pass-through (no candidates) = " << result.passthrough_no_candidates
            << '\n';
  return 0;
}

// --------------------------------------------------------------- chair ----

struct ChairArgs {
  std::string generated, dataset, instances, lexicon, cooc, out, per_image;
  std::string gt_mode = "annotations+captions";
  std::int64_t pairs_threshold = -1;
};

int run_chair(const ChairArgs& a) {
  Lexicon lex = Lexicon::load(a.lexicon);
  Dataset ds = load_dataset(a.dataset, a.instances, lex);
  std::vector<GeneratedCaption> generated = load_generated(a.generated);

  auto mode = gt_mode_from_name(a.gt_mode);
  if (!mode) throw ValidationError("unknown gt mode \"" + a.gt_mode + "\"");

  ChairReport report = evaluate(generated, ds, lex, *mode);

  std::optional<ChairReport::LowFreqBreakdown> low_freq;
  if (a.pairs_threshold >= 0) {
    if (a.cooc.empty())
      throw ValidationError("--pairs-threshold needs a co-occurrence matrix (--cooc)");
    CooccurrenceMatrix m = CooccurrenceMatrix::load(a.cooc);
    if (m.lexicon_fingerprint() != lex.fingerprint())
      throw ValidationError("co-occurrence matrix was built with a different lexicon");
    PairSet pairs = low_freq_pairs(m, a.pairs_threshold);
    ChairReport restricted = evaluate_low_freq(generated, ds, lex, pairs, *mode);
    low_freq = restricted.low_freq;
  }

  ordered_json doc;
  doc["chairs"] = report.chairs;
  doc["chairi"] = report.chairi;
  doc["n_sentences"] = report.n_sentences;
  doc["n_mentions"] = report.n_mentions;
  doc["n_hallucinated"] = report.n_hallucinated;
  doc["gt_mode"] = std::string(gt_mode_name(*mode));
  if (low_freq) {
    doc["low_freq"] = {{"pairs_threshold", a.pairs_threshold},
                       {"chairs", low_freq->chairs},
                       {"chairi", low_freq->chairi},
                       {"n_sentences", low_freq->n_sentences},
                       {"n_images", low_freq->n_images}};
  }
  doc["config"] = {{"generated", a.generated},
                   {"dataset", a.dataset},
                   {"instances", a.instances},
                   {"lexicon", a.lexicon},
                   {"lexicon_fingerprint", lex.fingerprint()}};

  if (a.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(a.out);
    if (!out) throw IoError("cannot open file for writing: " + a.out);
    out << doc.dump(2) << '\n';
  }

  if (!a.per_image.empty()) {
    std::ofstream tsv(a.per_image);
    if (!tsv) throw IoError("cannot open file for writing: " + a.per_image);
    tsv << "image_id\tmentions\thallucinated\n";
    for (const auto& [image_id, per] : report.per_image) {
      tsv << image_id << '\t' << per.mentions << '\t' << per.hallucinated << '\n';
    }
  }

  echo_config("chair", {{"generated", a.generated},
                        {"dataset", a.dataset},
                        {"gt-mode", a.gt_mode},
                        {"pairs-threshold", std::to_string(a.pairs_threshold)},
                        {"out", a.out.empty() ? "<stdout>" : a.out}});
  return 0;
}

// -------------------------------------------------------------- report ----

struct ReportArgs {
  std::string cooc, dataset, instances, lexicon, out;
  std::string split = "test";
  std::int64_t pairs_threshold = 200;
};

int run_report(const ReportArgs& a) {
  CooccurrenceMatrix m = CooccurrenceMatrix::load(a.cooc);
  UniformityStats stats = uniformity(m);
  PairSet pairs = low_freq_pairs(m, a.pairs_threshold);

  ordered_json doc;
  doc["n"] = m.size();
  doc["total_pair_count"] = m.total_pair_count();
  doc["cv"] = stats.cv;
  doc["row_entropy_mean"] = stats.row_entropy_mean;
  doc["pairs_threshold"] = a.pairs_threshold;
  doc["low_freq_pairs"] = pairs.size();

  if (!a.dataset.empty()) {
    if (a.lexicon.empty())
      throw ValidationError("--dataset analysis needs --lexicon to resolve ground truth");
    Lexicon lex = Lexicon::load(a.lexicon);
    if (m.lexicon_fingerprint() != lex.fingerprint())
      throw ValidationError("co-occurrence matrix was built with a different lexicon");
    Dataset ds = load_dataset(a.dataset, a.instances, lex);
    std::optional<Split> split;
    if (a.split != "all") {
      split = split_from_name(a.split);
      if (!split) throw ValidationError("unknown split \"" + a.split + "\"");
    }
    const auto selected = filter_images(ds, pairs, split);
    const std::size_t total = split ? ds.count(*split) : ds.images.size();
    doc["split"] = a.split;
    doc["selected_images"] = selected.size();
    doc["split_images"] = total;
    doc["selected_fraction"] =
        total == 0 ? 0.0 : static_cast<double>(selected.size()) / static_cast<double>(total);
  }

  if (a.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(a.out);
    if (!out) throw IoError("cannot open file for writing: " + a.out);
    out << doc.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Caption augmentation and object-hallucination analysis toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "Config file with key = value lines");

  ConfigFile cfg;
  try {
    cfg = preload_config(argc, argv);
  } catch (const Error& e) {
    std::cerr << "capaug: error: " << e.what() << '\n';
    return 1;
  }

  CoocArgs cooc;
  cooc.dataset = cfg.get("dataset", "");
  cooc.instances = cfg.get("instances", "");
  cooc.lexicon = cfg.get("lexicon", "");
  cooc.out = cfg.get("out", "");
  cooc.source = cfg.get("source", cooc.source);
  cooc.split = cfg.get("split", cooc.split);
  cooc.threads = cfg.get_num("threads", cooc.threads);
  auto* cooc_cmd = app.add_subcommand("cooc", "Build the object co-occurrence matrix");
  cooc_cmd->add_option("--dataset", cooc.dataset, "Karpathy split JSON");
  cooc_cmd->add_option("--instances", cooc.instances, "MSCOCO instances JSON");
  cooc_cmd->add_option("--lexicon", cooc.lexicon, "Object lexicon file");
  cooc_cmd->add_option("--source", cooc.source, "annotations | captions");
  cooc_cmd->add_option("--split", cooc.split, "train | val | test | all");
  cooc_cmd->add_option("--threads", cooc.threads, "Worker cap for counting");
  cooc_cmd->add_option("--out", cooc.out, "Output matrix file");

  SimplifyArgs simp;
  simp.in = cfg.get("in", "");
  simp.out = cfg.get("out", "");
  simp.lexicon = cfg.get("lexicon", "");
  simp.adjectives = cfg.get("adjectives", "");
  simp.determiners = cfg.get("determiners", "");
  auto* simplify_cmd = app.add_subcommand("simplify", "Simplify captions to det + head noun");
  simplify_cmd->add_option("--in", simp.in, "Input captions, one per line");
  simplify_cmd->add_option("--out", simp.out, "Output captions, one per line");
  simplify_cmd->add_option("--lexicon", simp.lexicon, "Object lexicon file");
  simplify_cmd->add_option("--adjectives", simp.adjectives, "Adjective word list");
  simplify_cmd->add_option("--determiners", simp.determiners, "Determiner word list");

  AugmentArgs aug;
  aug.dataset = cfg.get("dataset", "");
  aug.instances = cfg.get("instances", "");
  aug.cooc = cfg.get("cooc", "");
  aug.out = cfg.get("out", "");
  aug.trace = cfg.get("trace", "");
  aug.lexicon = cfg.get("lexicon", "");
  aug.adjectives = cfg.get("adjectives", "");
  aug.determiners = cfg.get("determiners", "");
  aug.sampler = cfg.get("sampler", aug.sampler);
  aug.coin_p = cfg.get_num("coin-p", aug.coin_p);
  aug.smoothing = cfg.get_num("smoothing", aug.smoothing);
  aug.seed = cfg.get_num("seed", aug.seed);
  aug.threads = cfg.get_num("threads", aug.threads);
  aug.no_simplify = cfg.get("no-simplify", "false") == "true";
  aug.no_exclusion = cfg.get("no-exclusion", "false") == "true";
  auto* augment_cmd = app.add_subcommand("augment", "Emit the augmented training captions");
  augment_cmd->add_option("--dataset", aug.dataset, "Karpathy split JSON");
  augment_cmd->add_option("--instances", aug.instances, "MSCOCO instances JSON");
  augment_cmd->add_option("--cooc", aug.cooc, "Co-occurrence matrix file");
  augment_cmd->add_option("--sampler", aug.sampler, "uniform | inverse | occ");
  augment_cmd->add_option("--coin-p", aug.coin_p, "P(train on augmented caption)");
  augment_cmd->add_flag("--no-simplify", aug.no_simplify, "Skip sentence simplification");
  augment_cmd->add_flag("--no-exclusion", aug.no_exclusion,
                        "Allow candidates already in the sentence");
  augment_cmd->add_option("--smoothing", aug.smoothing, "Inverse-weight pseudo-count");
  auto* seed_opt = augment_cmd->add_option("--seed", aug.seed, "Run seed (required)");
  augment_cmd->add_option("--threads", aug.threads, "Worker cap (occ runs single-stream)");
  augment_cmd->add_option("--lexicon", aug.lexicon, "Object lexicon file");
  augment_cmd->add_option("--adjectives", aug.adjectives, "Adjective word list");
  augment_cmd->add_option("--determiners", aug.determiners, "Determiner word list");
  augment_cmd->add_option("--out", aug.out, "Output augmented records (JSON lines)");
  augment_cmd->add_option("--trace", aug.trace, "Output uniformity trace file");

  ChairArgs chair;
  chair.generated = cfg.get("generated", "");
  chair.dataset = cfg.get("dataset", "");
  chair.instances = cfg.get("instances", "");
  chair.lexicon = cfg.get("lexicon", "");
  chair.cooc = cfg.get("cooc", "");
  chair.out = cfg.get("out", "");
  chair.per_image = cfg.get("per-image", "");
  chair.gt_mode = cfg.get("gt-mode", chair.gt_mode);
  chair.pairs_threshold = cfg.get_num<std::int64_t>("pairs-threshold", chair.pairs_threshold);
  auto* chair_cmd = app.add_subcommand("chair", "Score generated captions with CHAIR");
  chair_cmd->add_option("--generated", chair.generated, "Generated captions (JSON lines)");
  chair_cmd->add_option("--dataset", chair.dataset, "Karpathy split JSON");
  chair_cmd->add_option("--instances", chair.instances, "MSCOCO instances JSON");
  chair_cmd->add_option("--lexicon", chair.lexicon, "Object lexicon file");
  chair_cmd->add_option("--gt-mode", chair.gt_mode, "annotations | annotations+captions");
  chair_cmd->add_option("--pairs-threshold", chair.pairs_threshold,
                        "Add a low-frequency-pair breakdown below this count");
  chair_cmd->add_option("--cooc", chair.cooc, "Matrix for the pair breakdown");
  chair_cmd->add_option("--out", chair.out, "Report JSON (default stdout)");
  chair_cmd->add_option("--per-image", chair.per_image, "Per-image TSV table");

  ReportArgs rep;
  rep.cooc = cfg.get("cooc", "");
  rep.dataset = cfg.get("dataset", "");
  rep.instances = cfg.get("instances", "");
  rep.lexicon = cfg.get("lexicon", "");
  rep.out = cfg.get("out", "");
  rep.split = cfg.get("split", rep.split);
  rep.pairs_threshold = cfg.get_num<std::int64_t>("pairs-threshold", rep.pairs_threshold);
  auto* report_cmd = app.add_subcommand("report", "Matrix uniformity and low-frequency stats");
  report_cmd->add_option("--cooc", rep.cooc, "Co-occurrence matrix file");
  report_cmd->add_option("--dataset", rep.dataset, "Karpathy split JSON");
  report_cmd->add_option("--instances", rep.instances, "MSCOCO instances JSON");
  report_cmd->add_option("--lexicon", rep.lexicon, "Object lexicon file");
  report_cmd->add_option("--split", rep.split, "Split for image filtering");
  report_cmd->add_option("--pairs-threshold", rep.pairs_threshold, "Low-frequency cutoff");
  report_cmd->add_option("--out", rep.out, "Report JSON (default stdout)");

  // let --config appear after the subcommand name
  for (CLI::App* sub : {cooc_cmd, simplify_cmd, augment_cmd, chair_cmd, report_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (cooc_cmd->parsed()) return run_cooc(cooc);
    if (simplify_cmd->parsed()) return run_simplify(simp);
    if (augment_cmd->parsed()) {
      if (seed_opt->count() == 0 && !cfg.has("seed"))
        throw ValidationError("augment requires --seed (or a seed config key)");
      return run_augment(aug);
    }
    if (chair_cmd->parsed()) return run_chair(chair);
    if (report_cmd->parsed()) return run_report(rep);
  } catch (const Error& e) {
    std::cerr << "capaug: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "capaug: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
