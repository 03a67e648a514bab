#pragma once

#include <cmath>
#include <cstdlib>

#include "pathent/errors.hpp"

namespace pathent {

inline constexpr int kDefaultQuadratureDepth = 40;

namespace detail {

template <typename F>
double simpson_recurse(const F& f, double a, double b, double fa, double fm,
                       double fb, double whole, double abs_tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= abs_tol) return left + right + err;
  if (depth <= 0) {
    throw ValidationError(Violation::kQuadratureBudget,
                          "adaptive Simpson hit the subdivision limit before "
                          "reaching the requested tolerance");
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with interval halving and Richardson
/// extrapolation. rel_eps is relative to the first whole-interval estimate
/// (falling back to an absolute scale of 1 when that estimate is ~0, e.g. for
/// an identically-zero integrand).
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double rel_eps,
                        int max_depth = kDefaultQuadratureDepth) {
  if (!(rel_eps > 0.0)) {
    throw ValidationError(Violation::kInvalidArgument,
                          "quadrature tolerance must be positive");
  }
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double scale = std::max(std::abs(whole), 1e-300);
  const double abs_tol =
      (std::abs(whole) > 0.0) ? rel_eps * scale : rel_eps;
  return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol,
                                 max_depth);
}

}  // namespace pathent
