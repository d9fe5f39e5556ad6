#pragma once

// Dense complex polynomials and the Pochhammer symbol.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypersum {

using Complex = std::complex<double>;

/// Largest degree any constructor accepts. n! and the Pochhammer products
/// leave double range shortly after this.
inline constexpr int kDegreeCap = 170;

/// A parameter or argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Requested degree or index is above kDegreeCap.
class CapExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

/// An iterative method stopped at its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void check_cap(int n, const char* what) {
  if (n < 0)
    throw DomainError(std::string(what) + ": negative index");
  if (n > kDegreeCap)
    throw CapExceeded(std::string(what) + ": index " + std::to_string(n) +
                      " exceeds degree cap " + std::to_string(kDegreeCap));
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Polynomial sum_k coeffs[k] z^k with complex coefficients.
///
/// Values are immutable. Exact trailing zeros are dropped on construction,
/// so the zero polynomial is the empty coefficient sequence and every
/// nonzero polynomial has a nonzero leading coefficient. Non-finite
/// coefficients are rejected.
class Poly {
public:
  Poly() = default;
  Poly(std::initializer_list<Complex> cs) : coeffs_(cs) { normalize(); }
  explicit Poly(std::vector<Complex> cs) : coeffs_(std::move(cs)) { normalize(); }

  static Poly constant(Complex c) { return Poly(std::vector<Complex>{c}); }
  static Poly monomial(int k, Complex c = 1.0) {
    std::vector<Complex> cs(static_cast<std::size_t>(k) + 1, 0.0);
    cs.back() = c;
    return Poly(std::move(cs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of z^k; zero past the degree.
  Complex operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  Complex leading() const { return is_zero() ? Complex{} : coeffs_.back(); }

  double max_abs_coeff() const {
    double m = 0.0;
    for (auto c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Copy with trailing coefficients below rel_tol * max_abs_coeff() removed.
  /// Used where roundoff leaves spurious high-order residue.
  Poly trimmed(double rel_tol) const {
    const double thresh = rel_tol * max_abs_coeff();
    std::vector<Complex> cs = coeffs_;
    while (!cs.empty() && std::abs(cs.back()) <= thresh) cs.pop_back();
    return Poly(std::move(cs));
  }

  friend bool operator==(const Poly&, const Poly&) = default;

private:
  void normalize() {
    for (auto c : coeffs_)
      if (!is_finite(c)) throw DomainError("Poly: non-finite coefficient");
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
  }

  std::vector<Complex> coeffs_;
};

/// Horner evaluation.
inline Complex poly_eval(const Poly& p, Complex z) {
  Complex acc{};
  const auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// sum_k |c_k| |z|^k, the natural scale for rounding error in poly_eval.
inline double poly_eval_abs(const Poly& p, double r) {
  double acc = 0.0;
  const auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

inline Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Complex> cs(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < cs.size(); ++k) cs[k] = p[k] + q[k];
  return Poly(std::move(cs));
}

inline Poly operator-(const Poly& p, const Poly& q) {
  std::vector<Complex> cs(std::max(p.size(), q.size()));
  for (std::size_t k = 0; k < cs.size(); ++k) cs[k] = p[k] - q[k];
  return Poly(std::move(cs));
}

inline Poly operator*(Complex s, const Poly& p) {
  std::vector<Complex> cs(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : cs) c *= s;
  return Poly(std::move(cs));
}

/// Convolution of coefficient sequences.
inline Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Complex> cs(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) cs[i + j] += p[i] * q[j];
  return Poly(std::move(cs));
}

inline Poly operator*(const Poly& p, const Poly& q) { return poly_mul(p, q); }

/// z^k * p
inline Poly shift_up(const Poly& p, int k = 1) {
  if (p.is_zero()) return {};
  std::vector<Complex> cs(static_cast<std::size_t>(k), 0.0);
  cs.insert(cs.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly(std::move(cs));
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  std::vector<Complex> cs(p.size() - 1);
  for (std::size_t k = 0; k < cs.size(); ++k)
    cs[k] = static_cast<double>(k + 1) * p[k + 1];
  return Poly(std::move(cs));
}

/// Shifted factorial (c)_k = c(c+1)...(c+k-1), as a running product.
inline Complex pochhammer(Complex c, int k) {
  if (k < 0) throw DomainError("pochhammer: negative order");
  Complex acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= c + static_cast<double>(i);
  return acc;
}

/// max_k |p_k - q_k| / max_k max(|p_k|, |q_k|); zero when both are zero.
inline double rel_coeff_distance(const Poly& p, const Poly& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    num = std::max(num, std::abs(p[k] - q[k]));
    den = std::max({den, std::abs(p[k]), std::abs(q[k])});
  }
  return den == 0.0 ? num : num / den;
}

/// Worst per-coefficient relative distance |p_k - q_k| / max(|p_k|, |q_k|).
inline double max_coeffwise_rel_distance(const Poly& p, const Poly& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double den = std::max(std::abs(p[k]), std::abs(q[k]));
    if (den == 0.0) continue;
    worst = std::max(worst, std::abs(p[k] - q[k]) / den);
  }
  return worst;
}

}  // namespace hypersum
