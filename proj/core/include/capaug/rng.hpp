#pragma once

#include <cstdint>
#include <random>

namespace capaug {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Seeded random stream with cheap hierarchical splitting.
///
/// Every consumer in the pipeline derives its own child stream from the run
/// seed via `child(tag)`, so adding or removing one consumer never perturbs
/// the draws seen by the others. mt19937_64 output is pinned by the C++
/// standard, which makes whole-pipeline runs reproducible from a single seed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed)
      : key_(seed), gen_(detail::splitmix64(detail::splitmix64(seed))) {}

  /// Derive an independent stream identified by `tag`.
  SplitRng child(std::uint64_t tag) const {
    return SplitRng(detail::splitmix64(key_ ^ detail::splitmix64(tag)));
  }

  std::uint64_t seed_key() const { return key_; }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) built from the top 53 bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t key_;
  std::mt19937_64 gen_;
};

}  // namespace capaug
