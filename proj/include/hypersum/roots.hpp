#pragma once

// Polynomial zeros by Aberth-Ehrlich simultaneous iteration, and the
// localization checks for the zeros of g_n.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypersum/hyp_sums.hpp"
#include "hypersum/poly.hpp"

namespace hypersum {

struct RootFinderOptions {
  int max_iterations = 500;
  double correction_tol = 1e-14;  // relative to |root|
  double start_angle = 0.37;      // radians; breaks symmetry of the start circle
  int polish_steps = 3;
};

namespace detail {

/// Newton quotient p(z)/p'(z) and a backward-error test for p(z) ~ 0.
/// Large |z| is handled through the reversed polynomial to stay in range.
struct NewtonStep {
  Complex ratio;
  bool at_roundoff = false;
  double abs_value = 0.0;
};

inline NewtonStep newton_quotient(const std::vector<Complex>& a, Complex z) {
  const int n = static_cast<int>(a.size()) - 1;
  const double eps = std::numeric_limits<double>::epsilon();
  NewtonStep s;
  if (std::abs(z) <= 1.0) {
    Complex p = a[n], dp = 0.0;
    double bound = std::abs(a[n]);
    const double r = std::abs(z);
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[k];
      bound = bound * r + std::abs(a[k]);
    }
    s.abs_value = std::abs(p);
    s.at_roundoff = std::abs(p) <= 4.0 * n * eps * bound;
    s.ratio = dp == Complex{} ? Complex{} : p / dp;
    return s;
  }
  // p(z) = z^n r(w), w = 1/z, r(w) = sum_k a_{n-k} w^k
  const Complex w = 1.0 / z;
  Complex r = a[0], dr = 0.0;
  double bound = std::abs(a[0]);
  const double rw = std::abs(w);
  for (int k = 1; k <= n; ++k) {
    dr = dr * w + r;
    r = r * w + a[k];
    bound = bound * rw + std::abs(a[k]);
  }
  s.abs_value = std::abs(r);  // |p(z)| / |z|^n
  s.at_roundoff = std::abs(r) <= 4.0 * n * eps * bound;
  const Complex denom = static_cast<double>(n) * r - w * dr;
  s.ratio = denom == Complex{} ? Complex{} : z * r / denom;
  return s;
}

/// Positive root of |a_n| r^n = sum_{k<n} |a_k| r^k; every zero has modulus
/// at most this radius.
inline double cauchy_radius(const std::vector<Complex>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  const double lead = std::abs(a[n]);
  double hi = 1.0;
  for (int k = 0; k < n; ++k) hi = std::max(hi, 1.0 + std::abs(a[k]) / lead);
  auto h = [&](double r) {
    // divided by r^n to stay finite
    double acc = lead;
    double inv = 1.0;
    for (int k = n - 1; k >= 0; --k) {
      inv /= r;
      acc -= std::abs(a[k]) * inv;
    }
    return acc;
  };
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace detail

/// All deg f zeros of f, with multiplicity.
///
/// The variable is rescaled z = s w with s = (|c_0| / |c_n|)^{1/n} so the
/// end coefficients balance. Each returned root passes the backward-error
/// test |f(w)| <= tol * sum_k |c_k| |w|^k. Zeros at the origin are split
/// off exactly.
inline std::vector<Complex> find_roots(const Poly& f, double tol = 1e-8,
                                       const RootFinderOptions& opts = {}) {
  if (f.degree() < 1) throw DomainError("find_roots: polynomial has degree < 1");

  std::vector<Complex> roots;
  std::size_t lowest = 0;
  while (f[lowest] == Complex{}) ++lowest;
  for (std::size_t k = 0; k < lowest; ++k) roots.emplace_back(0.0, 0.0);
  std::vector<Complex> a(f.coeffs().begin() + static_cast<std::ptrdiff_t>(lowest), f.coeffs().end());
  const int n = static_cast<int>(a.size()) - 1;
  if (n == 0) return roots;

  const double scale = std::pow(std::abs(a[0]) / std::abs(a[n]), 1.0 / n);
  {
    double sk = 1.0, big = 0.0;
    for (auto& c : a) {
      c *= sk;
      sk *= scale;
    }
    for (auto c : a) big = std::max(big, std::abs(c));
    for (auto& c : a) c /= big;
  }

  const double radius = detail::cauchy_radius(a);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(radius, opts.start_angle + 2.0 * std::numbers::pi * k / n);

  std::vector<bool> done(z.size(), false);
  int remaining = n;
  for (int it = 0; it < opts.max_iterations && remaining > 0; ++it) {
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto step = detail::newton_quotient(a, z[i]);
      if (step.at_roundoff) {
        done[i] = true;
        --remaining;
        continue;
      }
      Complex repulsion{};
      for (int j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const Complex corr = step.ratio / (1.0 - step.ratio * repulsion);
      z[i] -= corr;
      if (std::abs(corr) <= opts.correction_tol * std::abs(z[i])) {
        done[i] = true;
        --remaining;
      }
    }
  }

  // Damped Newton polish; a step is kept only if it lowers |f|.
  for (auto& zi : z) {
    for (int s = 0; s < opts.polish_steps; ++s) {
      const auto cur = detail::newton_quotient(a, zi);
      if (cur.abs_value == 0.0) break;
      Complex step = cur.ratio;
      bool improved = false;
      for (int damp = 0; damp < 4 && !improved; ++damp, step *= 0.5) {
        const auto trial = detail::newton_quotient(a, zi - step);
        const double trial_abs =
            std::abs(zi - step) <= 1.0 ? trial.abs_value
                                       : trial.abs_value * std::pow(std::abs(zi - step), n);
        const double cur_abs =
            std::abs(zi) <= 1.0 ? cur.abs_value : cur.abs_value * std::pow(std::abs(zi), n);
        if (trial_abs < cur_abs) {
          zi -= step;
          improved = true;
        }
      }
      if (!improved) break;
    }
  }

  double worst = 0.0;
  const Poly scaled(a);
  for (auto zi : z)
    worst = std::max(worst, std::abs(poly_eval(scaled, zi)) / poly_eval_abs(scaled, std::abs(zi)));
  if (!(worst <= tol)) {
    std::ostringstream msg;
    msg << "find_roots: relative residual " << worst << " above " << tol;
    if (remaining > 0) msg << " after " << opts.max_iterations << " iterations";
    throw ConvergenceError(msg.str());
  }

  for (auto zi : z) roots.push_back(zi * scale);
  return roots;
}

inline double min_pair_distance(const std::vector<Complex>& roots) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      best = std::min(best, std::abs(roots[i] - roots[j]));
  return best;
}

inline double max_modulus(const std::vector<Complex>& roots) {
  double m = 0.0;
  for (auto r : roots) m = std::max(m, std::abs(r));
  return m;
}

/// True iff all pairwise distances exceed tol. A negative tol selects
/// 1e-7 times the largest root modulus.
inline bool check_simple(const std::vector<Complex>& roots, double tol = -1.0) {
  if (tol < 0.0) tol = 1e-7 * max_modulus(roots);
  return min_pair_distance(roots) > tol;
}

/// lead * prod (z - r_k)
inline Poly poly_from_roots(const std::vector<Complex>& roots, Complex lead = 1.0) {
  Poly acc = Poly::constant(lead);
  for (auto r : roots) acc = poly_mul(acc, Poly{-r, 1.0});
  return acc;
}

struct Annulus {
  double r_min = 0.0;
  double r_max = 0.0;
};

/// Enestrom-Kakeya annulus [min c_k/c_{k+1}, max c_k/c_{k+1}] for strictly
/// positive real coefficients.
inline Annulus enestrom_kakeya_bounds(const Poly& f) {
  if (f.degree() < 1) throw DomainError("enestrom_kakeya_bounds: degree < 1");
  for (auto c : f.coeffs())
    if (c.imag() != 0.0 || !(c.real() > 0.0))
      throw DomainError("enestrom_kakeya_bounds: coefficients must be real and positive");
  Annulus out{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t k = 0; k + 1 < f.size(); ++k) {
    const double ratio = f[k].real() / f[k + 1].real();
    out.r_min = std::min(out.r_min, ratio);
    out.r_max = std::max(out.r_max, ratio);
  }
  return out;
}

inline constexpr double kUnitBoundaryTol = 1e-9;
inline constexpr double kRayTol = 1e-8;

struct RootReport {
  std::vector<Complex> roots;
  double min_pair_distance = 0.0;
  double min_modulus = 0.0;
  bool simple = false;
  bool positive_real_root_found = false;  // some root within kRayTol of (1, inf)
  int boundary_roots = 0;                 // | |r| - 1 | <= kUnitBoundaryTol
  std::optional<Annulus> ek_annulus;
};

/// Roots of f with the diagnostics above; no conditions on f beyond degree >= 1.
inline RootReport analyze_roots(const Poly& f, double tol = 1e-8) {
  RootReport rep;
  rep.roots = find_roots(f, tol);
  rep.min_pair_distance = min_pair_distance(rep.roots);
  rep.simple = check_simple(rep.roots);
  rep.min_modulus = std::numeric_limits<double>::infinity();
  for (auto r : rep.roots) {
    rep.min_modulus = std::min(rep.min_modulus, std::abs(r));
    if (std::abs(r.imag()) < kRayTol && r.real() > 1.0) rep.positive_real_root_found = true;
    if (std::abs(std::abs(r) - 1.0) <= kUnitBoundaryTol) ++rep.boundary_roots;
  }
  bool positive = true;
  for (auto c : f.coeffs()) positive = positive && c.imag() == 0.0 && c.real() > 0.0;
  if (positive) rep.ek_annulus = enestrom_kakeya_bounds(f);
  return rep;
}

/// Empty when params satisfy: p <= q, all parameters real, 0 < a_j <= b_j
/// for j <= p, and b_k >= 1 for p < k <= q. Otherwise names the violation.
inline std::optional<std::string> localization_violation(const HypParams& params) {
  if (params.p() > params.q()) return "requires p <= q";
  if (!params.is_real()) return "requires real parameters";
  for (int j = 0; j < params.p(); ++j) {
    const double a = params.a()[j].real(), b = params.b()[j].real();
    if (!(a > 0.0 && a <= b))
      return "requires 0 < a" + std::to_string(j + 1) + " <= b" + std::to_string(j + 1);
  }
  for (int k = params.p(); k < params.q(); ++k)
    if (!(params.b()[k].real() >= 1.0)) return "requires b" + std::to_string(k + 1) + " >= 1";
  return std::nullopt;
}

/// Root report for g_n under the localization conditions; refuses otherwise.
inline RootReport location_report(const HypParams& params, int n) {
  if (auto why = localization_violation(params))
    throw DomainError("location_report: " + *why);
  if (n < 1) throw DomainError("location_report: n must be at least 1");
  return analyze_roots(gn_direct(params, n));
}

}  // namespace hypersum
