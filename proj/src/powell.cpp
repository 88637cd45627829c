#include <cmath>
#include <stdexcept>

#include "qcompile/dfo.hpp"
#include "dfo_internal.hpp"

namespace qcompile {

namespace {

constexpr double kGold = 1.618034;
constexpr double kGrowLimit = 100.0;
constexpr double kTiny = 1e-20;
constexpr double kZeps = 1e-12;
constexpr double kBrentTol = 1e-6;
constexpr int kBrentMaxIter = 100;

struct LineFn {
  detail::BudgetedObjective& f;
  const std::vector<double>& origin;
  const std::vector<double>& dir;
  mutable std::vector<double> point;

  LineFn(detail::BudgetedObjective& f_, const std::vector<double>& origin_,
         const std::vector<double>& dir_)
      : f(f_), origin(origin_), dir(dir_), point(origin_.size()) {}

  double operator()(double t) const {
    for (std::size_t j = 0; j < origin.size(); ++j) point[j] = origin[j] + t * dir[j];
    return f(point);
  }
};

// Brackets a minimum of g starting from (ax, bx) by golden-ratio expansion
// with parabolic extrapolation steps.
void bracket_minimum(const LineFn& g, double& ax, double& bx, double& cx, double& fa, double& fb,
                     double& fc) {
  fa = g(ax);
  fb = g(bx);
  if (fb > fa) {
    std::swap(ax, bx);
    std::swap(fa, fb);
  }
  cx = bx + kGold * (bx - ax);
  fc = g(cx);
  while (fb > fc) {
    const double r = (bx - ax) * (fb - fc);
    const double q = (bx - cx) * (fb - fa);
    double denom = 2.0 * (q - r);
    if (std::fabs(denom) < kTiny) denom = denom < 0 ? -kTiny : kTiny;
    double u = bx - ((bx - cx) * q - (bx - ax) * r) / denom;
    const double ulim = bx + kGrowLimit * (cx - bx);
    double fu;
    if ((bx - u) * (u - cx) > 0.0) {  // u between b and c
      fu = g(u);
      if (fu < fc) {
        ax = bx;
        fa = fb;
        bx = u;
        fb = fu;
        return;
      }
      if (fu > fb) {
        cx = u;
        fc = fu;
        return;
      }
      u = cx + kGold * (cx - bx);
      fu = g(u);
    } else if ((cx - u) * (u - ulim) > 0.0) {  // u between c and limit
      fu = g(u);
      if (fu < fc) {
        bx = cx;
        cx = u;
        u = u + kGold * (u - cx);
        fb = fc;
        fc = fu;
        fu = g(u);
      }
    } else if ((u - ulim) * (ulim - cx) >= 0.0) {  // cap at limit
      u = ulim;
      fu = g(u);
    } else {
      u = cx + kGold * (cx - bx);
      fu = g(u);
    }
    ax = bx;
    bx = cx;
    cx = u;
    fa = fb;
    fb = fc;
    fc = fu;
  }
}

// Brent's method on a bracketed minimum; returns (t_min, f_min).
std::pair<double, double> brent_minimize(const LineFn& g, double ax, double bx, double cx,
                                         double fbx) {
  double a = std::min(ax, cx), b = std::max(ax, cx);
  double x = bx, w = bx, v = bx;
  double fx = fbx, fw = fbx, fv = fbx;
  double d = 0.0, e = 0.0;
  for (int iter = 0; iter < kBrentMaxIter; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = kBrentTol * std::fabs(x) + kZeps;
    const double tol2 = 2.0 * tol1;
    if (std::fabs(x - xm) <= tol2 - 0.5 * (b - a)) break;
    bool golden = true;
    if (std::fabs(e) > tol1) {
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double e_old = e;
      e = d;
      if (std::fabs(p) < std::fabs(0.5 * q * e_old) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (xm - x >= 0 ? tol1 : -tol1);
        golden = false;
      }
    }
    if (golden) {
      e = (x >= xm) ? a - x : b - x;
      d = 0.381966 * e;
    }
    const double u = (std::fabs(d) >= tol1) ? x + d : x + (d >= 0 ? tol1 : -tol1);
    const double fu = g(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; w = x; x = u;
      fv = fw; fw = fx; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; w = u;
        fv = fw; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return {x, fx};
}

// Minimizes from `p` along `dir`; moves p to the line minimum, scales dir by
// the step taken, and updates fret.
void line_minimize(detail::BudgetedObjective& f, std::vector<double>& p, std::vector<double>& dir,
                   double& fret) {
  LineFn g(f, p, dir);
  double ax = 0.0, bx = 1.0, cx, fa, fb, fc;
  bracket_minimum(g, ax, bx, cx, fa, fb, fc);
  const auto [tmin, fmin] = brent_minimize(g, ax, bx, cx, fb);
  if (fmin <= fret) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      dir[j] *= tmin;
      p[j] += dir[j];
    }
    fret = fmin;
  } else {
    // keep p; shrink the stored direction so later bracketing stays local
    for (std::size_t j = 0; j < p.size(); ++j) dir[j] *= 0.5;
  }
}

// One Powell descent (minimization) until convergence or budget exhaustion.
void powell_run(detail::BudgetedObjective& f, std::vector<double> p, double step, double tol) {
  const std::size_t d = p.size();
  std::vector<std::vector<double>> dirs(d, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j) dirs[j][j] = step;

  double fp = f(p);
  std::vector<double> p_old(d), pe(d), dir(d);
  while (true) {
    const double fp0 = fp;
    p_old = p;
    std::size_t ibig = 0;
    double del = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double before = fp;
      line_minimize(f, p, dirs[i], fp);
      if (before - fp > del) {
        del = before - fp;
        ibig = i;
      }
    }
    if (2.0 * (fp0 - fp) <= tol * (std::fabs(fp0) + std::fabs(fp)) + kTiny) return;

    for (std::size_t j = 0; j < d; ++j) {
      pe[j] = 2.0 * p[j] - p_old[j];
      dir[j] = p[j] - p_old[j];
    }
    const double fe = f(pe);
    if (fe < fp0) {
      const double t = 2.0 * (fp0 - 2.0 * fp + fe) * (fp0 - fp - del) * (fp0 - fp - del) -
                       del * (fp0 - fe) * (fp0 - fe);
      if (t < 0.0) {
        line_minimize(f, p, dir, fp);
        dirs[ibig] = dirs[d - 1];
        dirs[d - 1] = dir;
      }
    }
  }
}

}  // namespace

DfoResult powell(const Objective& objective, std::vector<double> x0, const DfoOptions& opts,
                 RandomStream& rng) {
  if (x0.empty()) throw std::invalid_argument("x0 must be non-empty");
  if (opts.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  detail::BudgetedObjective f(objective, opts.max_iters);
  DfoResult result;
  std::vector<double> start = x0;
  try {
    while (true) {
      powell_run(f, start, opts.initial_step, opts.tolerance);
      ++result.converged_count;
      if (!opts.restart_on_converge) break;
      start = f.best_x();
      for (double& v : start) v += rng.uniform(-opts.restart_radius, opts.restart_radius);
    }
  } catch (const detail::BudgetExhausted&) {
    result.budget_exhausted = true;
  }
  f.finish(result);
  return result;
}

}  // namespace qcompile
