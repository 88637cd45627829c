#pragma once

// Test-only Gauss-Hermite quadrature: E[f(theta)] for theta ~ N(mu, diag
// sigma) via a tensor-product rule. Used as the deterministic oracle for
// J(mu) when checking the REINFORCE estimator against finite differences.

#include <functional>
#include <utility>
#include <vector>

namespace qcompile::oracles {

/// Physicists' Gauss-Hermite nodes/weights for integral f(x) e^{-x^2} dx.
std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int n);

/// E_{theta ~ N(mu, diag(sigma))}[f(theta)] with `nodes` points per
/// dimension. Cost is nodes^dim evaluations; keep dim small.
double gaussian_expectation(const std::function<double(const std::vector<double>&)>& f,
                            const std::vector<double>& mu, const std::vector<double>& sigma,
                            int nodes);

/// Central finite difference of a scalar function along coordinate j.
double central_difference(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x, std::size_t j, double h);

/// Fourth-order five-point central difference along coordinate j.
double central_difference4(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x, std::size_t j, double h);

}  // namespace qcompile::oracles
