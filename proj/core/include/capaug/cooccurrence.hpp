#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "capaug/corpus.hpp"
#include "capaug/lexicon.hpp"

namespace capaug {

/// Symmetric N x N object co-occurrence counts with a zero diagonal.
class CooccurrenceMatrix {
 public:
  CooccurrenceMatrix() = default;
  CooccurrenceMatrix(int n, std::string lexicon_fingerprint);

  int size() const { return n_; }

  std::int64_t at(ObjectId i, ObjectId j) const {
    return counts_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(j)];
  }

  /// Symmetric increment of the (i, j) pair. i and j must differ.
  void add_pair(ObjectId i, ObjectId j, std::int64_t delta = 1);

  /// Symmetric decrement clamped at zero; the diagonal never moves.
  void decrement_pair(ObjectId i, ObjectId j);

  /// Merge another matrix of the same shape by addition.
  void accumulate(const CooccurrenceMatrix& other);

  std::int64_t row_sum(ObjectId i) const;
  std::int64_t total_pair_count() const;  // sum over unordered pairs

  const std::string& lexicon_fingerprint() const { return lexicon_fingerprint_; }

  /// Persist as `N=<int> lexicon=<hash>` followed by N rows of N integers.
  void save(const std::string& path) const;
  static CooccurrenceMatrix load(const std::string& path);

  bool is_symmetric_nonnegative() const;

  friend bool operator==(const CooccurrenceMatrix&, const CooccurrenceMatrix&) = default;

 private:
  int n_ = 0;
  std::string lexicon_fingerprint_;
  std::vector<std::int64_t> counts_;  // row-major
};

enum class CoocSource { Annotations, Captions };

/// Count, per image, every unordered pair of distinct objects present,
/// taken from ground-truth annotations or from caption mentions. `split` of
/// nullopt selects all images; an empty selection is an error.
/// `threads` > 1 shards images across workers and merges by addition.
CooccurrenceMatrix build_cooccurrence(const Dataset& dataset, CoocSource source,
                                      std::optional<Split> split, const Lexicon& lex,
                                      int threads = 1);

/// Row normalization: probs[k] = counts[i][k] / row sum. An all-zero row
/// yields the uniform distribution over k != i.
struct NormalizedRow {
  ObjectId row_index = 0;
  std::vector<double> probs;
};

NormalizedRow normalize_row(const CooccurrenceMatrix& m, ObjectId i);

/// Scalar summary of how uniform the matrix is: coefficient of variation of
/// the off-diagonal counts and the mean Shannon entropy (nats) of the
/// normalized rows.
struct UniformityStats {
  double cv = 0.0;
  double row_entropy_mean = 0.0;
};

UniformityStats uniformity(const CooccurrenceMatrix& m);

/// Unordered object pairs, stored with first < second.
using PairSet = std::set<std::pair<ObjectId, ObjectId>>;

/// All unordered pairs with a count strictly below `threshold`.
PairSet low_freq_pairs(const CooccurrenceMatrix& m, std::int64_t threshold);

/// Images (in the given split, or all splits) whose ground-truth objects
/// contain at least one pair from the set.
std::vector<std::int64_t> filter_images(const Dataset& dataset, const PairSet& pairs,
                                        std::optional<Split> split);

}  // namespace capaug
