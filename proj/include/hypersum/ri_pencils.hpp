#pragma once

// R_I-type three-term recurrences and their T-fraction case, polynomials
// associated with a Jacobi-type pencil (J3, J5, alpha, beta), and the
// Chebyshev decompositions of partial sums on the unit circle.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hypersum/hyp_sums.hpp"
#include "hypersum/poly.hpp"

namespace hypersum {

/// P_n = (z - c_n) P_{n-1} - lambda_n (z - a_n) P_{n-2}, P_{-1} = 0, P_0 = 1.
/// Element i of each sequence holds the index n = i + 1.
struct RIRecurrence {
  std::vector<Complex> c;
  std::vector<Complex> lambda;
  std::vector<Complex> a;

  Complex c_at(int n) const { return c.at(static_cast<std::size_t>(n - 1)); }
  Complex lambda_at(int n) const { return lambda.at(static_cast<std::size_t>(n - 1)); }
  Complex a_at(int n) const { return a.at(static_cast<std::size_t>(n - 1)); }
};

struct RIValidity {
  bool lambda_nonzero = true;  // lambda_{n+1} != 0 for n >= 1
  bool pn_at_an_nonzero = true;  // P_n(a_n) != 0 for n >= 1
  int first_bad_lambda = -1;
  int first_bad_pn = -1;

  bool ok() const { return lambda_nonzero && pn_at_an_nonzero; }
};

struct RISequence {
  std::vector<Poly> P;  // P_0..P_N
  RIValidity validity;
};

inline constexpr double kRIZeroTol = 1e-12;

/// P_0..P_N. lambda_1 multiplies P_{-1} = 0 and is never checked.
/// P_n(a_n) counts as zero when below kRIZeroTol * sum_k |coeff_k| |a_n|^k.
inline RISequence ri_generate(const RIRecurrence& rec, int N) {
  if (N < 0) throw DomainError("ri_generate: negative N");
  const auto need = static_cast<std::size_t>(N);
  if (rec.c.size() < need || rec.lambda.size() < need || rec.a.size() < need)
    throw DomainError("ri_generate: recurrence sequences shorter than N = " + std::to_string(N));

  RISequence out;
  out.P.reserve(need + 1);
  Poly prev;
  Poly cur = Poly::constant(1.0);
  out.P.push_back(cur);
  for (int n = 1; n <= N; ++n) {
    Poly next = poly_mul(Poly{-rec.c_at(n), 1.0}, cur) -
                rec.lambda_at(n) * poly_mul(Poly{-rec.a_at(n), 1.0}, prev);
    prev = std::move(cur);
    cur = std::move(next);
    out.P.push_back(cur);
  }

  auto& v = out.validity;
  for (int n = 2; n <= N; ++n) {
    if (rec.lambda_at(n) == Complex{} && v.lambda_nonzero) {
      v.lambda_nonzero = false;
      v.first_bad_lambda = n;
    }
  }
  for (int n = 1; n <= N; ++n) {
    const Complex at = rec.a_at(n);
    const Poly& Pn = out.P[static_cast<std::size_t>(n)];
    const double scale = poly_eval_abs(Pn, std::abs(at));
    if (std::abs(poly_eval(Pn, at)) <= kRIZeroTol * scale && v.pn_at_an_nonzero) {
      v.pn_at_an_nonzero = false;
      v.first_bad_pn = n;
    }
  }
  return out;
}

/// c_n = -delta_n, lambda_n = delta_{n-1}, a_n = 0 for n = 1..N; the
/// resulting P_n are the monic partial sums G_n.
inline RIRecurrence tfraction_from_hyp(const HypParams& params, int N) {
  check_cap(N, "tfraction_from_hyp");
  RIRecurrence rec;
  for (int n = 1; n <= N; ++n) {
    rec.c.push_back(-delta_k(params, n));
    rec.lambda.push_back(delta_k(params, n - 1));
    rec.a.push_back(0.0);
  }
  return rec;
}

/// (J3, J5, alpha, beta). J3 has diagonal b_k and off-diagonal a_k > 0;
/// J5 has diagonal alpha_n, first off-diagonal beta_n and second
/// off-diagonal gamma_n > 0; alpha > 0.
class JacobiPencil {
public:
  JacobiPencil(std::vector<double> j3_diag, std::vector<double> j3_offdiag,
               std::vector<double> j5_diag, std::vector<double> j5_off1,
               std::vector<double> j5_off2, double alpha, double beta)
      : j3_diag_(std::move(j3_diag)), j3_off_(std::move(j3_offdiag)),
        j5_diag_(std::move(j5_diag)), j5_off1_(std::move(j5_off1)),
        j5_off2_(std::move(j5_off2)), alpha_(alpha), beta_(beta) {
    for (std::size_t k = 0; k < j3_off_.size(); ++k)
      if (!(j3_off_[k] > 0.0))
        throw DomainError("JacobiPencil: J3 off-diagonal a" + std::to_string(k) + " must be positive");
    for (std::size_t k = 0; k < j5_off2_.size(); ++k)
      if (!(j5_off2_[k] > 0.0))
        throw DomainError("JacobiPencil: J5 gamma" + std::to_string(k) + " must be positive");
    if (!(alpha_ > 0.0)) throw DomainError("JacobiPencil: alpha must be positive");
    if (!std::isfinite(beta_)) throw DomainError("JacobiPencil: beta must be finite");
  }

  const std::vector<double>& j3_diag() const { return j3_diag_; }
  const std::vector<double>& j3_offdiag() const { return j3_off_; }
  const std::vector<double>& j5_diag() const { return j5_diag_; }
  const std::vector<double>& j5_off1() const { return j5_off1_; }
  const std::vector<double>& j5_off2() const { return j5_off2_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// Number of five-term rows the stored diagonals support.
  std::size_t rows_available() const {
    return std::min({j3_diag_.size(), j3_off_.size(), j5_diag_.size(), j5_off1_.size(),
                     j5_off2_.size()});
  }

  // Index -1 and -2 entries are zero by convention.
  double a(int k) const { return k < 0 ? 0.0 : j3_off_.at(static_cast<std::size_t>(k)); }
  double b(int k) const { return j3_diag_.at(static_cast<std::size_t>(k)); }
  double al(int n) const { return j5_diag_.at(static_cast<std::size_t>(n)); }
  double be(int n) const { return n < 0 ? 0.0 : j5_off1_.at(static_cast<std::size_t>(n)); }
  double ga(int n) const { return n < 0 ? 0.0 : j5_off2_.at(static_cast<std::size_t>(n)); }

private:
  std::vector<double> j3_diag_, j3_off_, j5_diag_, j5_off1_, j5_off2_;
  double alpha_, beta_;
};

/// p_0..p_N in lambda: p_0 = 1, p_1 = alpha lambda + beta, then row n of
/// (J5 - lambda J3) p = 0 solved forward for p_{n+2}.
inline std::vector<Poly> pencil_polynomials(const JacobiPencil& pencil, int N) {
  if (N < 0) throw DomainError("pencil_polynomials: negative N");
  if (N >= 2 && pencil.rows_available() < static_cast<std::size_t>(N - 1))
    throw DomainError("pencil_polynomials: diagonals too short for N = " + std::to_string(N));
  std::vector<Poly> p;
  p.push_back(Poly::constant(1.0));
  if (N >= 1) p.push_back(Poly{pencil.beta(), pencil.alpha()});
  auto at = [&](int k) { return k < 0 ? Poly{} : p[static_cast<std::size_t>(k)]; };
  auto linear = [](double c0, double c1) { return Poly{c0, -c1}; };  // c0 - lambda c1
  for (int n = 0; n + 2 <= N; ++n) {
    Poly rest = pencil.ga(n - 2) * at(n - 2) +
                poly_mul(linear(pencil.be(n - 1), pencil.a(n - 1)), at(n - 1)) +
                poly_mul(linear(pencil.al(n), pencil.b(n)), at(n)) +
                poly_mul(linear(pencil.be(n), pencil.a(n)), at(n + 1));
    p.push_back((-1.0 / pencil.ga(n)) * rest);
  }
  return p;
}

namespace detail {
template <typename Term>
double pencil_rows(const JacobiPencil& pencil, const std::vector<Poly>& polys, int rows, Term&& term) {
  if (rows < 0 || polys.size() < static_cast<std::size_t>(rows) + 2)
    throw DomainError("pencil_residual: need at least rows + 2 polynomials");
  if (pencil.rows_available() < static_cast<std::size_t>(rows))
    throw DomainError("pencil_residual: pencil has fewer than rows diagonals");
  double worst = 0.0;
  for (int n = 0; n < rows; ++n) worst = std::max(worst, term(n));
  return worst;
}
}  // namespace detail

/// max over the first `rows` five-term relations of |row_n| at lambda.
inline double pencil_residual(const JacobiPencil& pencil, const std::vector<Poly>& polys,
                              Complex lambda, int rows) {
  auto val = [&](int k) { return k < 0 ? Complex{} : poly_eval(polys[static_cast<std::size_t>(k)], lambda); };
  return detail::pencil_rows(pencil, polys, rows, [&](int n) {
    const Complex r = pencil.ga(n - 2) * val(n - 2) +
                      (pencil.be(n - 1) - lambda * pencil.a(n - 1)) * val(n - 1) +
                      (pencil.al(n) - lambda * pencil.b(n)) * val(n) +
                      (pencil.be(n) - lambda * pencil.a(n)) * val(n + 1) +
                      pencil.ga(n) * val(n + 2);
    return std::abs(r);
  });
}

/// Same rows with every term replaced by its modulus bound; the natural
/// scale for pencil_residual.
inline double pencil_residual_scale(const JacobiPencil& pencil, const std::vector<Poly>& polys,
                                    Complex lambda, int rows) {
  const double r = std::abs(lambda);
  auto val = [&](int k) { return k < 0 ? 0.0 : poly_eval_abs(polys[static_cast<std::size_t>(k)], r); };
  return detail::pencil_rows(pencil, polys, rows, [&](int n) {
    return pencil.ga(n - 2) * val(n - 2) +
           (std::abs(pencil.be(n - 1)) + r * pencil.a(n - 1)) * val(n - 1) +
           (std::abs(pencil.al(n)) + r * std::abs(pencil.b(n))) * val(n) +
           (std::abs(pencil.be(n)) + r * pencil.a(n)) * val(n + 1) + pencil.ga(n) * val(n + 2);
  });
}

enum class ChebKind { First, Second };

/// T_k or U_k by w_{k+1} = 2x w_k - w_{k-1}.
inline double chebyshev_eval(ChebKind kind, int k, double x) {
  if (k < 0) throw DomainError("chebyshev_eval: negative degree");
  double prev = 1.0;
  double cur = kind == ChebKind::First ? x : 2.0 * x;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct ChebDecomposition {
  std::vector<double> t_coeffs;  // Re f_n(e^{i tau}) = sum_k t_k T_k(cos tau)
  std::vector<double> u_coeffs;  // Im f_{n+1}(e^{i tau}) = sin tau sum_j u_j U_j(cos tau)
};

/// Requires d real and strictly positive. t = (d_0..d_n), u = (d_1..d_{n+1}).
inline ChebDecomposition kernel_decompose(const PowerSeriesCoeffs& d, int n) {
  if (n < 0 || static_cast<std::size_t>(n) + 1 >= d.size())
    throw DomainError("kernel_decompose: need n + 2 coefficients");
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n) + 1; ++k)
    if (d[k].imag() != 0.0 || !(d[k].real() > 0.0))
      throw DomainError("kernel_decompose: coefficient d" + std::to_string(k) +
                        " is not positive");
  ChebDecomposition out;
  for (int k = 0; k <= n; ++k) {
    out.t_coeffs.push_back(d[static_cast<std::size_t>(k)].real());
    out.u_coeffs.push_back(d[static_cast<std::size_t>(k) + 1].real());
  }
  return out;
}

inline double chebyshev_series(ChebKind kind, const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc += coeffs[k] * chebyshev_eval(kind, static_cast<int>(k), x);
  return acc;
}

struct KernelIdentityError {
  double re_error = 0.0;
  double im_error = 0.0;
};

/// Distance between the partial sums on the circle at angle tau and their
/// Chebyshev expansions.
inline KernelIdentityError kernel_identity_error(const PowerSeriesCoeffs& d, int n, double tau) {
  const auto dec = kernel_decompose(d, n);
  const auto sums = generic_partial_sums(d, n + 1);
  const Complex w = std::polar(1.0, tau);
  const double x = std::cos(tau);
  KernelIdentityError e;
  e.re_error = std::abs(poly_eval(sums.f[static_cast<std::size_t>(n)], w).real() -
                        chebyshev_series(ChebKind::First, dec.t_coeffs, x));
  e.im_error = std::abs(poly_eval(sums.f[static_cast<std::size_t>(n) + 1], w).imag() -
                        std::sin(tau) * chebyshev_series(ChebKind::Second, dec.u_coeffs, x));
  return e;
}

}  // namespace hypersum
