#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcompile/random.hpp"

using namespace qcompile;

TEST_CASE("same seed reproduces the stream") {
  RandomStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
}

TEST_CASE("derivation is independent of parent consumption") {
  RandomStream a(42), b(42);
  a.uniform();
  a.normal();
  RandomStream da = a.derive("child", 3);
  RandomStream db = b.derive("child", 3);
  CHECK(da.uniform() == db.uniform());
}

TEST_CASE("distinct tokens give distinct streams") {
  RandomStream a(42);
  CHECK(a.derive("x").seed() != a.derive("y").seed());
  CHECK(a.derive("x", 0).seed() != a.derive("x", 1).seed());
  CHECK(a.derive(0, 1).seed() != a.derive(1, 0).seed());
}

TEST_CASE("normal moments") {
  RandomStream rng(7);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::fabs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::fabs(var - 1.0) < 0.02);
}

TEST_CASE("uniform range and binomial edge cases") {
  RandomStream rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform(2.0, 3.0);
    CHECK(u >= 2.0);
    CHECK(u < 3.0);
  }
  CHECK(rng.binomial(100, 0.0) == 0);
  CHECK(rng.binomial(100, 1.0) == 100);
  const std::int64_t k = rng.binomial(100000, 0.25);
  CHECK(std::fabs(k / 100000.0 - 0.25) < 0.01);
}
