#pragma once

namespace qcompile {

/// Two-sided Hoeffding bound for the mean of m [0,1]-valued samples:
/// P(|F_hat - F| >= eps) <= 2 exp(-2 eps^2 m).
double hoeffding_bound(double epsilon, int m);

/// Smallest m with 2 exp(-2 eps^2 m) <= delta, i.e. ceil(ln(2/delta) / (2 eps^2)).
int hoeffding_required_m(double epsilon, double delta);

}  // namespace qcompile
