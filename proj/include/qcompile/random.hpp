#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qcompile {

/// Seeded random stream. Every source of randomness in the library takes one
/// of these explicitly; there is no global RNG. Child streams are derived by
/// hashing the parent seed with a list of tokens, so parallel work items can
/// be given independent, reproducible streams keyed on (master_seed, labels).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Derive an independent child stream keyed on this stream's seed plus the
  /// given tokens. Derivation depends only on the seed, not on how much of
  /// the parent stream has been consumed.
  RandomStream derive(std::uint64_t token) const;
  RandomStream derive(std::uint64_t a, std::uint64_t b) const;
  RandomStream derive(std::string_view label) const;
  RandomStream derive(std::string_view label, std::uint64_t token) const;

  std::uint64_t seed() const { return seed_; }

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // standard normal
  std::uint64_t uniform_index(std::uint64_t n);      // {0, ..., n-1}
  std::int64_t binomial(std::int64_t trials, double p);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64-style mixing used for stream derivation; exposed for tests.
std::uint64_t mix_token(std::uint64_t h, std::uint64_t token);
std::uint64_t hash_label(std::string_view label);

}  // namespace qcompile
