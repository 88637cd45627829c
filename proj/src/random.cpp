#include "qcompile/random.hpp"

namespace qcompile {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_token(std::uint64_t h, std::uint64_t token) {
  return splitmix64(h ^ splitmix64(token));
}

std::uint64_t hash_label(std::string_view label) {
  // FNV-1a, then one mixing round to spread the low bits.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

RandomStream RandomStream::derive(std::uint64_t token) const {
  return RandomStream(mix_token(seed_, token));
}

RandomStream RandomStream::derive(std::uint64_t a, std::uint64_t b) const {
  return RandomStream(mix_token(mix_token(seed_, a), b));
}

RandomStream RandomStream::derive(std::string_view label) const {
  return RandomStream(mix_token(seed_, hash_label(label)));
}

RandomStream RandomStream::derive(std::string_view label, std::uint64_t token) const {
  return RandomStream(mix_token(mix_token(seed_, hash_label(label)), token));
}

double RandomStream::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RandomStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RandomStream::normal() {
  return std::normal_distribution<double>(0.0, 1.0)(engine_);
}

std::uint64_t RandomStream::uniform_index(std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

std::int64_t RandomStream::binomial(std::int64_t trials, double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  return std::binomial_distribution<std::int64_t>(trials, p)(engine_);
}

}  // namespace qcompile
