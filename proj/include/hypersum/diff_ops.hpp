#pragma once

// Linear differential operators sum_l c_l(z) d^l/dz^l with polynomial
// coefficients, stored in expanded form, and the operator R that
// annihilates the pFq series up to its truncation term.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "hypersum/hyp_sums.hpp"
#include "hypersum/poly.hpp"

namespace hypersum {

class LinDiffOp {
public:
  LinDiffOp() = default;
  explicit LinDiffOp(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  static LinDiffOp identity() { return LinDiffOp({Poly::constant(1.0)}); }
  static LinDiffOp scalar(Complex c) { return LinDiffOp({Poly::constant(c)}); }
  static LinDiffOp derivative() { return LinDiffOp({Poly{}, Poly::constant(1.0)}); }
  /// theta = z d/dz
  static LinDiffOp theta() { return LinDiffOp({Poly{}, Poly::monomial(1)}); }

  /// Highest l with c_l != 0; -1 for the zero operator.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  Poly coeff(int l) const {
    return l >= 0 && static_cast<std::size_t>(l) < coeffs_.size() ? coeffs_[l] : Poly{};
  }

  friend LinDiffOp operator+(const LinDiffOp& A, const LinDiffOp& B) {
    std::vector<Poly> cs(std::max(A.coeffs_.size(), B.coeffs_.size()));
    for (std::size_t l = 0; l < cs.size(); ++l)
      cs[l] = A.coeff(static_cast<int>(l)) + B.coeff(static_cast<int>(l));
    return LinDiffOp(std::move(cs));
  }
  friend LinDiffOp operator-(const LinDiffOp& A, const LinDiffOp& B) {
    return A + (-1.0) * B;
  }
  friend LinDiffOp operator*(Complex s, const LinDiffOp& A) {
    std::vector<Poly> cs;
    cs.reserve(A.coeffs_.size());
    for (const auto& c : A.coeffs_) cs.push_back(s * c);
    return LinDiffOp(std::move(cs));
  }

private:
  std::vector<Poly> coeffs_;
};

/// sum_l c_l(z) f^(l)(z)
inline Poly op_apply(const LinDiffOp& A, const Poly& f) {
  Poly acc;
  Poly deriv = f;
  for (int l = 0; l <= A.order(); ++l) {
    if (deriv.is_zero()) break;
    if (!A.coeff(l).is_zero()) acc = acc + poly_mul(A.coeff(l), deriv);
    deriv = poly_derivative(deriv);
  }
  return acc;
}

/// A o B. Uses d^i (b(z) f^(j)) = sum_m C(i,m) b^(m) f^(i-m+j).
inline LinDiffOp op_compose(const LinDiffOp& A, const LinDiffOp& B) {
  if (A.order() < 0 || B.order() < 0) return {};
  std::vector<Poly> cs(static_cast<std::size_t>(A.order() + B.order()) + 1);
  for (int j = 0; j <= B.order(); ++j) {
    const Poly& bj = B.coeffs()[j];
    if (bj.is_zero()) continue;
    // derivs[m] = b_j^(m)
    std::vector<Poly> derivs{bj};
    for (int i = 0; i <= A.order(); ++i) {
      const Poly& ai = A.coeffs()[i];
      while (static_cast<int>(derivs.size()) <= i)
        derivs.push_back(poly_derivative(derivs.back()));
      if (ai.is_zero()) continue;
      double binom = 1.0;
      for (int m = 0; m <= i; ++m) {
        if (!derivs[m].is_zero())
          cs[i - m + j] = cs[i - m + j] + binom * poly_mul(ai, derivs[m]);
        binom = binom * static_cast<double>(i - m) / static_cast<double>(m + 1);
      }
    }
  }
  return LinDiffOp(std::move(cs));
}

/// Coefficientwise modulus. Paired with abs_op, op_apply then yields a
/// per-coefficient bound on the magnitude of the terms that were summed.
inline Poly abs_coeffs(const Poly& p) {
  std::vector<Complex> cs;
  cs.reserve(p.size());
  for (auto c : p.coeffs()) cs.emplace_back(std::abs(c), 0.0);
  return Poly(std::move(cs));
}

inline LinDiffOp abs_op(const LinDiffOp& A) {
  std::vector<Poly> cs;
  cs.reserve(A.coeffs().size());
  for (const auto& c : A.coeffs()) cs.push_back(abs_coeffs(c));
  return LinDiffOp(std::move(cs));
}

/// The two halves of R: d/dz prod_l (theta + b_l - 1) and prod_j (a_j + theta).
/// Factors are composed in ascending index starting from the identity.
struct RParts {
  LinDiffOp lower;
  LinDiffOp upper;
};

inline RParts build_R_parts(const HypParams& params) {
  LinDiffOp lower = LinDiffOp::identity();
  for (auto b : params.b())
    lower = op_compose(lower, LinDiffOp::theta() + LinDiffOp::scalar(b - 1.0));
  LinDiffOp upper = LinDiffOp::identity();
  for (auto a : params.a())
    upper = op_compose(upper, LinDiffOp::scalar(a) + LinDiffOp::theta());
  return {op_compose(LinDiffOp::derivative(), lower), std::move(upper)};
}

/// R = d/dz prod_l (theta + b_l - 1) - prod_j (a_j + theta), of order
/// max(p, q + 1).
inline LinDiffOp build_R(const HypParams& params) {
  auto parts = build_R_parts(params);
  return parts.lower - parts.upper;
}

/// Per-coefficient bound on the magnitude of the terms summed into R f.
inline Poly r_apply_scale(const HypParams& params, const Poly& f) {
  const auto parts = build_R_parts(params);
  const Poly af = abs_coeffs(f);
  return op_apply(abs_op(parts.lower), af) + op_apply(abs_op(parts.upper), af);
}

/// kappa_n = n! (b_1)_n...(b_q)_n / ((a_1)_{n+1}...(a_p)_{n+1}),
/// the scalar with -kappa_n R g_n = z^n.
inline Complex kappa(const HypParams& params, int n) {
  check_cap(n, "kappa");
  const Complex xi_n = hyp_coeffs(params, n).back();
  return 1.0 / (xi_n * params.upper_product(n));
}

/// -kappa_n R g_n; equals z^n up to rounding.
inline Poly r_image(const HypParams& params, int n) {
  const Poly g = gn_direct(params, n);
  return (-kappa(params, n)) * op_apply(build_R(params), g);
}

struct RImageCheck {
  Poly image;                    // -kappa_n R g_n
  double monomial_error = 0.0;   // |coefficient of z^n - 1|
  double off_monomial_mass = 0.0;  // worst |c_k| / (|kappa_n| S_k), k != n
};

/// Off-monomial residue is measured against S = r_apply_scale(g_n), which
/// bounds the terms whose cancellation produces each coefficient of R g_n.
inline RImageCheck check_r_image(const HypParams& params, int n) {
  const Poly g = gn_direct(params, n);
  const LinDiffOp R = build_R(params);
  const Complex kap = kappa(params, n);
  RImageCheck out;
  out.image = (-kap) * op_apply(R, g);
  const Poly scale = r_apply_scale(params, g);
  out.monomial_error = std::abs(out.image[static_cast<std::size_t>(n)] - 1.0);
  for (std::size_t k = 0; k < out.image.size(); ++k) {
    if (static_cast<int>(k) == n) continue;
    const double s = std::abs(kap) * scale[k].real();
    const double c = std::abs(out.image[k]);
    if (c == 0.0) continue;
    out.off_monomial_mass = std::max(out.off_monomial_mass, s > 0.0 ? c / s : std::numeric_limits<double>::infinity());
  }
  return out;
}

struct OdeCheck {
  Poly residual;             // theta R g_n - n R g_n
  double scaled_error = 0.0;  // worst |residual_k| / ((n+1) S_k)
};

/// Residual of theta R g_n - n R g_n = 0, with each coefficient measured
/// against (n+1) times the magnitude bound S = |R| |g_n|.
inline OdeCheck verify_ode(const HypParams& params, int n) {
  check_cap(n, "verify_ode");
  const Poly g = gn_direct(params, n);
  const LinDiffOp R = build_R(params);
  const Poly Rg = op_apply(R, g);
  OdeCheck out;
  out.residual = op_apply(LinDiffOp::theta(), Rg) - static_cast<double>(n) * Rg;
  const Poly scale = r_apply_scale(params, g);
  for (std::size_t k = 0; k < out.residual.size(); ++k) {
    const double c = std::abs(out.residual[k]);
    if (c == 0.0) continue;
    const double s = static_cast<double>(n + 1) * scale[k].real();
    out.scaled_error = std::max(out.scaled_error, s > 0.0 ? c / s : std::numeric_limits<double>::infinity());
  }
  return out;
}

}  // namespace hypersum
