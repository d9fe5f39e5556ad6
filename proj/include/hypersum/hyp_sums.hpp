#pragma once

// Partial sums g_n of the pFq series, their monic rescalings G_n, the
// recurrences connecting them, and the same construction for an arbitrary
// power series with nonzero coefficients.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hypersum/poly.hpp"

namespace hypersum {

/// Minimum distance a parameter must keep from every point of {0,-1,-2,...}.
inline constexpr double kParamExclusionTol = 1e-12;

/// Upper parameters a_1..a_p and lower parameters b_1..b_q of pFq.
/// p = a.size(), q = b.size(); an empty list means the factor is absent.
class HypParams {
public:
  HypParams() = default;
  HypParams(std::vector<Complex> a, std::vector<Complex> b)
      : a_(std::move(a)), b_(std::move(b)) {
    for (std::size_t j = 0; j < a_.size(); ++j) validate(a_[j], "a", j);
    for (std::size_t j = 0; j < b_.size(); ++j) validate(b_[j], "b", j);
  }

  int p() const { return static_cast<int>(a_.size()); }
  int q() const { return static_cast<int>(b_.size()); }
  const std::vector<Complex>& a() const { return a_; }
  const std::vector<Complex>& b() const { return b_; }

  /// rho = max(p, q + 1), the order of the operator R.
  int rho() const { return std::max(p(), q() + 1); }

  bool is_real() const {
    for (auto c : a_) if (c.imag() != 0.0) return false;
    for (auto c : b_) if (c.imag() != 0.0) return false;
    return true;
  }

  /// prod_j (a_j + s)
  Complex upper_product(double s) const {
    Complex acc = 1.0;
    for (auto c : a_) acc *= c + s;
    return acc;
  }
  /// prod_l (b_l + s)
  Complex lower_product(double s) const {
    Complex acc = 1.0;
    for (auto c : b_) acc *= c + s;
    return acc;
  }

private:
  static void validate(Complex c, const char* name, std::size_t j) {
    const std::string label = std::string(name) + std::to_string(j + 1);
    if (!is_finite(c)) throw DomainError("parameter " + label + " is not finite");
    for (int m = 0; m <= kDegreeCap; ++m) {
      if (std::abs(c + static_cast<double>(m)) < kParamExclusionTol)
        throw DomainError("parameter " + label + " is a non-positive integer (" +
                          std::to_string(-m) + ")");
    }
  }

  std::vector<Complex> a_;
  std::vector<Complex> b_;
};

/// xi_{k+1} / xi_k = prod(a_j + k) / (prod(b_l + k) (k + 1)).
inline Complex hyp_coeff_ratio(const HypParams& params, int k) {
  return params.upper_product(k) /
         (params.lower_product(k) * static_cast<double>(k + 1));
}

/// xi_0..xi_n, built incrementally.
inline std::vector<Complex> hyp_coeffs(const HypParams& params, int n) {
  check_cap(n, "hyp_coeffs");
  std::vector<Complex> xi(static_cast<std::size_t>(n) + 1);
  xi[0] = 1.0;
  for (int k = 0; k < n; ++k) xi[k + 1] = xi[k] * hyp_coeff_ratio(params, k);
  return xi;
}

/// xi_k = (a_1)_k...(a_p)_k / ((b_1)_k...(b_q)_k k!)
inline Complex hyp_coeff(const HypParams& params, int k) {
  return hyp_coeffs(params, k).back();
}

/// g_n(z) = sum_{k<=n} xi_k z^k.
inline Poly gn_direct(const HypParams& params, int n) {
  check_cap(n, "gn_direct");
  return Poly(hyp_coeffs(params, n));
}

/// g_0..g_N from
///   (n+1) prod(b+n) / prod(a+n) (g_{n+1} - g_n) = z (g_n - g_{n-1}),
/// starting at g_{-1} = 0, g_0 = 1.
inline std::vector<Poly> gn_by_recurrence(const HypParams& params, int N) {
  check_cap(N, "gn_by_recurrence");
  std::vector<Poly> g;
  g.reserve(static_cast<std::size_t>(N) + 1);
  Poly prev;  // g_{-1}
  Poly cur = Poly::constant(1.0);
  g.push_back(cur);
  for (int n = 0; n < N; ++n) {
    const Complex lhs_factor =
        static_cast<double>(n + 1) * params.lower_product(n) / params.upper_product(n);
    Poly next = cur + (1.0 / lhs_factor) * shift_up(cur - prev);
    prev = std::move(cur);
    cur = std::move(next);
    g.push_back(cur);
  }
  return g;
}

/// delta_0 = 0, delta_k = k prod(b_l + k - 1) / prod(a_j + k - 1).
inline Complex delta_k(const HypParams& params, int k) {
  check_cap(k, "delta_k");
  if (k == 0) return 0.0;
  return static_cast<double>(k) * params.lower_product(k - 1) /
         params.upper_product(k - 1);
}

/// G_n = n! (b)_n... / (a)_n... g_n, i.e. g_n / xi_n.
inline Poly Gn_monic(const HypParams& params, int n) {
  check_cap(n, "Gn_monic");
  const auto xi = hyp_coeffs(params, n);
  std::vector<Complex> cs(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) cs[k] = xi[k] / xi.back();
  cs.back() = 1.0;
  return Poly(std::move(cs));
}

/// G_0..G_N from G_n = (z + delta_n) G_{n-1} - delta_{n-1} z G_{n-2},
/// G_{-1} = 0.
inline std::vector<Poly> Gn_by_recurrence(const HypParams& params, int N) {
  check_cap(N, "Gn_by_recurrence");
  std::vector<Poly> G;
  G.reserve(static_cast<std::size_t>(N) + 1);
  Poly prev;
  Poly cur = Poly::constant(1.0);
  G.push_back(cur);
  for (int n = 1; n <= N; ++n) {
    Poly next = shift_up(cur) + delta_k(params, n) * cur -
                delta_k(params, n - 1) * shift_up(prev);
    prev = std::move(cur);
    cur = std::move(next);
    G.push_back(cur);
  }
  return G;
}

/// Coefficients d_0..d_N of a power series, all nonzero.
class PowerSeriesCoeffs {
public:
  static constexpr double kMinModulus = 1e-300;

  explicit PowerSeriesCoeffs(std::vector<Complex> d) : d_(std::move(d)) {
    for (std::size_t k = 0; k < d_.size(); ++k) {
      if (!is_finite(d_[k]))
        throw DomainError("power series coefficient d" + std::to_string(k) +
                          " is not finite");
      if (std::abs(d_[k]) < kMinModulus)
        throw DomainError("power series coefficient d" + std::to_string(k) +
                          " is zero");
    }
  }

  static PowerSeriesCoeffs from_hyp(const HypParams& params, int N) {
    return PowerSeriesCoeffs(hyp_coeffs(params, N));
  }

  std::size_t size() const { return d_.size(); }
  Complex operator[](std::size_t k) const { return d_[k]; }
  const std::vector<Complex>& values() const { return d_; }

private:
  std::vector<Complex> d_;
};

struct PartialSums {
  std::vector<Poly> f;  // f_n = sum_{k<=n} d_k z^k
  std::vector<Poly> F;  // monic F_n = f_n / d_n, generated by recurrence
};

/// f_0..f_N directly, and F_0..F_N from
///   F_n = (z + d_{n-1}/d_n) F_{n-1} - (d_{n-2}/d_{n-1}) z F_{n-2},
/// with F_{-1} = 0 and d_{-1} = 1.
inline PartialSums generic_partial_sums(const PowerSeriesCoeffs& d, int N) {
  if (N < 0 || static_cast<std::size_t>(N) >= d.size())
    throw DomainError("generic_partial_sums: N=" + std::to_string(N) +
                      " out of range for " + std::to_string(d.size()) +
                      " coefficients");
  auto at = [&](int k) -> Complex { return k < 0 ? Complex{1.0} : d[static_cast<std::size_t>(k)]; };

  PartialSums out;
  out.f.reserve(static_cast<std::size_t>(N) + 1);
  out.F.reserve(static_cast<std::size_t>(N) + 1);
  std::vector<Complex> running;
  for (int n = 0; n <= N; ++n) {
    running.push_back(at(n));
    out.f.emplace_back(running);
  }

  Poly prev;
  Poly cur = Poly::constant(1.0);
  out.F.push_back(cur);
  for (int n = 1; n <= N; ++n) {
    Poly next = shift_up(cur) + (at(n - 1) / at(n)) * cur -
                (at(n - 2) / at(n - 1)) * shift_up(prev);
    prev = std::move(cur);
    cur = std::move(next);
    out.F.push_back(cur);
  }
  return out;
}

}  // namespace hypersum
