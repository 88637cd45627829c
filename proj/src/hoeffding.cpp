#include "qcompile/hoeffding.hpp"

#include <cmath>
#include <stdexcept>

namespace qcompile {

double hoeffding_bound(double epsilon, int m) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return 2.0 * std::exp(-2.0 * epsilon * epsilon * static_cast<double>(m));
}

int hoeffding_required_m(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  const double m = std::log(2.0 / delta) / (2.0 * epsilon * epsilon);
  return static_cast<int>(std::ceil(m));
}

}  // namespace qcompile
