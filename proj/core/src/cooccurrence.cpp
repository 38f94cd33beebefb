#include "capaug/cooccurrence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "capaug/errors.hpp"

namespace capaug {

CooccurrenceMatrix::CooccurrenceMatrix(int n, std::string lexicon_fingerprint)
    : n_(n),
      lexicon_fingerprint_(std::move(lexicon_fingerprint)),
      counts_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n <= 0) throw ValidationError("co-occurrence matrix needs N >= 1");
}

void CooccurrenceMatrix::add_pair(ObjectId i, ObjectId j, std::int64_t delta) {
  if (i == j) throw ValidationError("co-occurrence pair with i == j");
  auto n = static_cast<std::size_t>(n_);
  counts_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] += delta;
  counts_[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] += delta;
}

void CooccurrenceMatrix::decrement_pair(ObjectId i, ObjectId j) {
  if (i == j) return;  // diagonal is pinned at zero
  if (at(i, j) == 0) return;
  add_pair(i, j, -1);
}

void CooccurrenceMatrix::accumulate(const CooccurrenceMatrix& other) {
  if (other.n_ != n_) throw ValidationError("cannot merge matrices of different N");
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
}

std::int64_t CooccurrenceMatrix::row_sum(ObjectId i) const {
  std::int64_t sum = 0;
  for (ObjectId k = 0; k < n_; ++k) sum += at(i, k);
  return sum;
}

std::int64_t CooccurrenceMatrix::total_pair_count() const {
  std::int64_t sum = 0;
  for (ObjectId i = 0; i < n_; ++i)
    for (ObjectId j = i + 1; j < n_; ++j) sum += at(i, j);
  return sum;
}

bool CooccurrenceMatrix::is_symmetric_nonnegative() const {
  for (ObjectId i = 0; i < n_; ++i) {
    if (at(i, i) != 0) return false;
    for (ObjectId j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i) || at(i, j) < 0) return false;
    }
  }
  return true;
}

void CooccurrenceMatrix::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << "N=" << n_ << " lexicon=" << lexicon_fingerprint_ << '\n';
  for (ObjectId i = 0; i < n_; ++i) {
    for (ObjectId j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failure on " + path);
}

CooccurrenceMatrix CooccurrenceMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);

  std::string header;
  if (!std::getline(in, header)) throw ParseError(path + ": empty matrix file");
  int n = 0;
  std::string fingerprint;
  {
    std::istringstream hs(header);
    std::string n_field, lex_field;
    hs >> n_field >> lex_field;
    if (n_field.rfind("N=", 0) != 0 || lex_field.rfind("lexicon=", 0) != 0)
      throw ParseError(path + ": bad header \"" + header + "\"");
    try {
      n = std::stoi(n_field.substr(2));
    } catch (const std::exception&) {
      throw ParseError(path + ": bad N in header");
    }
    fingerprint = lex_field.substr(8);
  }

  CooccurrenceMatrix m(n, fingerprint);
  for (int i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line))
      throw ParseError(path + ": expected " + std::to_string(n) + " rows, got " +
                       std::to_string(i));
    std::istringstream ls(line);
    for (int j = 0; j < n; ++j) {
      std::int64_t v;
      if (!(ls >> v))
        throw ParseError(path + ":" + std::to_string(i + 2) + ": row has fewer than " +
                         std::to_string(n) + " entries");
      m.counts_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)] = v;
    }
  }
  if (!m.is_symmetric_nonnegative())
    throw ValidationError(path + ": matrix is not symmetric/non-negative with zero diagonal");
  return m;
}

namespace {

std::vector<ObjectId> image_objects(const ImageRecord& image, CoocSource source,
                                    const Lexicon& lex) {
  if (source == CoocSource::Annotations) return image.gt_objects;
  std::set<ObjectId> present;
  for (const Caption& caption : image.captions) {
    for (const Mention& m : lex.match_mentions(caption.tokens)) present.insert(m.object);
  }
  return {present.begin(), present.end()};
}

void count_range(const Dataset& dataset, CoocSource source, std::optional<Split> split,
                 const Lexicon& lex, std::size_t begin, std::size_t end,
                 CooccurrenceMatrix& out) {
  for (std::size_t idx = begin; idx < end; ++idx) {
    const ImageRecord& image = dataset.images[idx];
    if (split && image.split != *split) continue;
    std::vector<ObjectId> objects = image_objects(image, source, lex);
    for (std::size_t a = 0; a < objects.size(); ++a)
      for (std::size_t b = a + 1; b < objects.size(); ++b)
        out.add_pair(objects[a], objects[b]);
  }
}

}  // namespace

CooccurrenceMatrix build_cooccurrence(const Dataset& dataset, CoocSource source,
                                      std::optional<Split> split, const Lexicon& lex,
                                      int threads) {
  std::size_t selected = split ? dataset.count(*split) : dataset.images.size();
  if (selected == 0) {
    throw ValidationError(std::string("empty split selection: ") +
                          (split ? std::string(split_name(*split)) : "all"));
  }

  CooccurrenceMatrix m(lex.size(), lex.fingerprint());
  const std::size_t total = dataset.images.size();
  if (threads <= 1 || total < 2048) {
    count_range(dataset, source, split, lex, 0, total, m);
    return m;
  }

  const auto workers = static_cast<std::size_t>(threads);
  std::vector<CooccurrenceMatrix> partials(workers,
                                           CooccurrenceMatrix(lex.size(), lex.fingerprint()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end, w] {
      count_range(dataset, source, split, lex, begin, end, partials[w]);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& partial : partials) m.accumulate(partial);
  return m;
}

NormalizedRow normalize_row(const CooccurrenceMatrix& m, ObjectId i) {
  const int n = m.size();
  if (i < 0 || i >= n)
    throw ValidationError("row index " + std::to_string(i) + " out of range");
  NormalizedRow row;
  row.row_index = i;
  row.probs.assign(static_cast<std::size_t>(n), 0.0);
  const std::int64_t sum = m.row_sum(i);
  if (sum == 0) {
    if (n > 1) {
      const double p = 1.0 / static_cast<double>(n - 1);
      for (ObjectId k = 0; k < n; ++k)
        if (k != i) row.probs[static_cast<std::size_t>(k)] = p;
    }
    return row;
  }
  for (ObjectId k = 0; k < n; ++k) {
    row.probs[static_cast<std::size_t>(k)] =
        static_cast<double>(m.at(i, k)) / static_cast<double>(sum);
  }
  return row;
}

UniformityStats uniformity(const CooccurrenceMatrix& m) {
  const int n = m.size();
  if (n < 2) throw ValidationError("uniformity needs N >= 2");

  const auto count = static_cast<double>(n) * (n - 1);
  double mean = 0.0;
  for (ObjectId i = 0; i < n; ++i)
    for (ObjectId j = 0; j < n; ++j)
      if (i != j) mean += static_cast<double>(m.at(i, j));
  mean /= count;

  UniformityStats stats;
  if (mean > 0.0) {
    double var = 0.0;
    for (ObjectId i = 0; i < n; ++i) {
      for (ObjectId j = 0; j < n; ++j) {
        if (i == j) continue;
        const double d = static_cast<double>(m.at(i, j)) - mean;
        var += d * d;
      }
    }
    stats.cv = std::sqrt(var / count) / mean;
  }

  double entropy_sum = 0.0;
  for (ObjectId i = 0; i < n; ++i) {
    NormalizedRow row = normalize_row(m, i);
    double h = 0.0;
    for (double p : row.probs)
      if (p > 0.0) h -= p * std::log(p);
    entropy_sum += h;
  }
  stats.row_entropy_mean = entropy_sum / static_cast<double>(n);
  return stats;
}

PairSet low_freq_pairs(const CooccurrenceMatrix& m, std::int64_t threshold) {
  if (threshold < 0) throw ValidationError("pair threshold must be >= 0");
  PairSet pairs;
  for (ObjectId i = 0; i < m.size(); ++i)
    for (ObjectId j = i + 1; j < m.size(); ++j)
      if (m.at(i, j) < threshold) pairs.emplace(i, j);
  return pairs;
}

std::vector<std::int64_t> filter_images(const Dataset& dataset, const PairSet& pairs,
                                        std::optional<Split> split) {
  std::vector<std::int64_t> selected;
  for (const ImageRecord& image : dataset.images) {
    if (split && image.split != *split) continue;
    const auto& objects = image.gt_objects;
    bool hit = false;
    for (std::size_t a = 0; a < objects.size() && !hit; ++a)
      for (std::size_t b = a + 1; b < objects.size() && !hit; ++b)
        hit = pairs.count({objects[a], objects[b]}) > 0;
    if (hit) selected.push_back(image.image_id);
  }
  return selected;
}

}  // namespace capaug
