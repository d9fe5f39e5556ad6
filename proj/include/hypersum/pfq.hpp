#pragma once

// Full pFq series evaluation and the two integral representations of the
// partial sums: a Dirichlet-kernel convolution on the unit circle, and an
// improper integral along the negative real axis.

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hypersum/hyp_sums.hpp"
#include "hypersum/poly.hpp"
#include "hypersum/sobolev.hpp"

namespace hypersum {

enum class DomainClass { Entire, UnitDisk, Divergent };

inline DomainClass classify(const HypParams& params) {
  if (params.p() <= params.q()) return DomainClass::Entire;
  if (params.p() == params.q() + 1) return DomainClass::UnitDisk;
  return DomainClass::Divergent;
}

inline const char* to_string(DomainClass c) {
  switch (c) {
    case DomainClass::Entire: return "entire";
    case DomainClass::UnitDisk: return "unit-disk";
    case DomainClass::Divergent: return "divergent";
  }
  return "?";
}

struct PfqValue {
  Complex value;
  int terms_used = 0;
  DomainClass domain_class = DomainClass::Entire;
};

struct PfqOptions {
  double tol = 1e-17;
  int term_cap = 10000;
  /// Admit |z| = 1 for p = q + 1. Summation may then hit the cap.
  bool allow_boundary = false;
};

/// Sum of the pFq series, stopping once three consecutive terms fall below
/// tol * |partial sum|.
inline PfqValue pfq_eval(const HypParams& params, Complex z, const PfqOptions& opts = {}) {
  PfqValue out;
  out.domain_class = classify(params);
  switch (out.domain_class) {
    case DomainClass::Entire: break;
    case DomainClass::UnitDisk:
      if (std::abs(z) >= 1.0 && !(opts.allow_boundary && std::abs(z) <= 1.0 + 1e-12))
        throw DomainError("pfq_eval: p = q + 1 requires |z| < 1");
      break;
    case DomainClass::Divergent:
      if (z != Complex{}) throw DomainError("pfq_eval: p > q + 1 series diverges for z != 0");
      break;
  }

  Complex sum = 1.0, term = 1.0;
  int small_run = 0;
  for (int k = 0; k < opts.term_cap; ++k) {
    term *= hyp_coeff_ratio(params, k) * z;
    sum += term;
    out.terms_used = k + 2;
    if (!is_finite(sum)) throw ConvergenceError("pfq_eval: partial sums overflowed");
    if (std::abs(term) <= opts.tol * std::abs(sum)) {
      if (++small_run == 3) {
        out.value = sum;
        return out;
      }
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("pfq_eval: term cap " + std::to_string(opts.term_cap) +
                         " reached at z = (" + std::to_string(z.real()) + ", " +
                         std::to_string(z.imag()) + ")");
}

/// sum_{k<=n} u^k; closed form (1 - u^{n+1}) / (1 - u) away from u = 1.
inline Complex dirichlet_sum(Complex u, int n) {
  if (std::abs(1.0 - u) >= 1e-6) return (1.0 - std::pow(u, n + 1)) / (1.0 - u);
  Complex acc{}, pw = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += pw;
    pw *= u;
  }
  return acc;
}

/// pFq sampled at the N-th roots of unity, for reuse across angles and n.
struct CircleSamples {
  int N = 0;
  std::vector<Complex> nodes;
  std::vector<Complex> values;
};

inline CircleSamples sample_pfq_on_circle(const HypParams& params, int N) {
  if (params.p() > params.q())
    throw DomainError("circle representation requires p <= q");
  CircleSamples s;
  s.N = N;
  s.nodes = circle_nodes(N);
  s.values.reserve(s.nodes.size());
  for (auto z : s.nodes) s.values.push_back(pfq_eval(params, z).value);
  return s;
}

inline constexpr int kDefaultCircleNodes = 4096;

/// (1/2pi) int_0^{2pi} d_n(e^{i(tau - t)}) pFq(e^{it}) dt on equispaced nodes.
inline Complex integral_rep_circle(const CircleSamples& samples, int n, double tau) {
  check_cap(n, "integral_rep_circle");
  Complex acc{};
  for (int j = 0; j < samples.N; ++j) {
    const double t = 2.0 * std::numbers::pi * j / samples.N;
    acc += dirichlet_sum(std::polar(1.0, tau - t), n) * samples.values[j];
  }
  return acc / static_cast<double>(samples.N);
}

inline Complex integral_rep_circle(const HypParams& params, int n, double tau,
                                   int N = kDefaultCircleNodes) {
  return integral_rep_circle(sample_pfq_on_circle(params, N), n, tau);
}

/// p+1Fq+1(-n, a; -n-1, b; t) as a degree-n polynomial.
inline Poly terminating_pfq_poly(const HypParams& params, int n) {
  check_cap(n, "terminating_pfq_poly");
  std::vector<Complex> cs(static_cast<std::size_t>(n) + 1);
  cs[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex ratio = (static_cast<double>(k - n) / static_cast<double>(k - n - 1)) *
                          hyp_coeff_ratio(params, k);
    cs[k + 1] = cs[k] * ratio;
  }
  return Poly(std::move(cs));
}

/// -(n+1) x^{n+1} int_{-inf}^x t^{-n-2} P(t) dt, with P the terminating
/// series, integrated term by term: int_{-inf}^x t^{k-n-2} dt =
/// x^{k-n-1} / (k-n-1).
inline Complex integral_rep_negative_axis(const HypParams& params, int n, double x) {
  if (!(x < 0.0)) throw DomainError("integral_rep_negative_axis: requires x < 0");
  const Poly P = terminating_pfq_poly(params, n);
  Complex acc{};
  double xk = 1.0;  // x^k; multiplied by x^{n+1} x^{-n-1} implicitly
  for (int k = 0; k <= n; ++k) {
    acc += P[static_cast<std::size_t>(k)] * (xk / static_cast<double>(k - n - 1));
    xk *= x;
  }
  return -static_cast<double>(n + 1) * acc;
}

/// The same integral by quadrature after t = x/u: equals
/// (n+1) int_0^1 u^n P(x/u) du, done with 64-point Gauss-Legendre.
inline Complex integral_rep_negative_axis_quadrature(const HypParams& params, int n, double x) {
  if (!(x < 0.0)) throw DomainError("integral_rep_negative_axis: requires x < 0");
  const Poly P = terminating_pfq_poly(params, n);
  auto integrand = [&](double u, bool imag) {
    const Complex v = std::pow(u, n) * poly_eval(P, Complex(x / u, 0.0));
    return imag ? v.imag() : v.real();
  };
  using Rule = boost::math::quadrature::gauss<double, 64>;
  const double re = Rule::integrate([&](double u) { return integrand(u, false); }, 0.0, 1.0);
  const double im = Rule::integrate([&](double u) { return integrand(u, true); }, 0.0, 1.0);
  return static_cast<double>(n + 1) * Complex(re, im);
}

struct ConvergenceRow {
  int n = 0;
  double sup_error = 0.0;
  bool pfq_converged = true;  // false when pfq_eval failed at some sample
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  /// sup errors non-increasing in n, up to slack.
  bool monotone = true;
};

/// sup over samples of |g_n(z) - pFq(z)| for each n. For p = q + 1 the
/// samples may sit on the unit circle; rows where the series cannot be
/// summed there are flagged instead of failing.
inline ConvergenceReport convergence_report(const HypParams& params, const std::vector<int>& n_list,
                                            const std::vector<Complex>& samples,
                                            double monotone_slack = 1e-12) {
  if (classify(params) == DomainClass::Divergent)
    throw DomainError("convergence_report: p > q + 1 series diverges");
  PfqOptions opts;
  opts.allow_boundary = true;
  std::vector<Complex> target(samples.size());
  bool converged = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    try {
      target[i] = pfq_eval(params, samples[i], opts).value;
    } catch (const ConvergenceError&) {
      converged = false;
    }
  }

  ConvergenceReport rep;
  for (int n : n_list) {
    ConvergenceRow row;
    row.n = n;
    row.pfq_converged = converged;
    if (converged) {
      const Poly g = gn_direct(params, n);
      for (std::size_t i = 0; i < samples.size(); ++i)
        row.sup_error = std::max(row.sup_error, std::abs(poly_eval(g, samples[i]) - target[i]));
    } else {
      row.sup_error = std::nan("");
    }
    rep.rows.push_back(row);
  }
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].n > rep.rows[i - 1].n &&
        rep.rows[i].sup_error > rep.rows[i - 1].sup_error + monotone_slack)
      rep.monotone = false;
  return rep;
}

}  // namespace hypersum
