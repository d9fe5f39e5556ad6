#pragma once

// Sobolev inner product on the unit circle whose matrix is the rank-one
// outer product of the coefficients of R, integrated against normalized
// arc length with the equispaced rule.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hypersum/diff_ops.hpp"
#include "hypersum/hyp_sums.hpp"
#include "hypersum/poly.hpp"

namespace hypersum {

using ComplexMatrix = std::vector<std::vector<Complex>>;

/// Coefficients c_0..c_rho of R. The matrix M = c c^H is never formed.
struct SobolevForm {
  std::vector<Poly> c;
  int rho = 0;

  LinDiffOp as_operator() const { return LinDiffOp(c); }
};

inline SobolevForm build_sobolev_form(const HypParams& params) {
  const LinDiffOp R = build_R(params);
  SobolevForm form;
  form.rho = params.rho();
  form.c.resize(static_cast<std::size_t>(form.rho) + 1);
  for (int l = 0; l <= form.rho; ++l) form.c[l] = R.coeff(l);
  return form;
}

/// e^{2 pi i j / N}, j = 0..N-1.
inline std::vector<Complex> circle_nodes(int N) {
  if (N < 1) throw DomainError("circle_nodes: need at least one node");
  std::vector<Complex> z(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j)
    z[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / N);
  return z;
}

/// (1/N) sum_j fn(z_j) over the N-th roots of unity. Exact for
/// trigonometric polynomials whose frequencies lie strictly inside (-N, N).
template <typename Fn>
Complex circle_quadrature(int N, Fn&& fn) {
  Complex acc{};
  for (auto z : circle_nodes(N)) acc += fn(z);
  return acc / static_cast<double>(N);
}

/// Smallest node count sobolev_inner accepts for the given degrees.
inline int min_sobolev_nodes(int deg_f, int deg_h, int rho) {
  return std::max(deg_f, 0) + std::max(deg_h, 0) + 2 * rho + 1;
}

/// 2 (n_max + rho) + 8 rounded up to a power of two.
inline int auto_node_count(int n_max, int rho) {
  const int want = 2 * (n_max + rho) + 8;
  int N = 1;
  while (N < want) N *= 2;
  return N;
}

/// integral over T of (R f) conj(R h) d mu_0.
inline Complex sobolev_inner(const SobolevForm& form, const Poly& f, const Poly& h, int N) {
  const int need = min_sobolev_nodes(f.degree(), h.degree(), form.rho);
  if (N < need)
    throw DomainError("sobolev_inner: " + std::to_string(N) +
                      " nodes would alias; need at least " + std::to_string(need));
  const LinDiffOp R = form.as_operator();
  const Poly Rf = op_apply(R, f);
  const Poly Rh = op_apply(R, h);
  return circle_quadrature(N, [&](Complex z) {
    return poly_eval(Rf, z) * std::conj(poly_eval(Rh, z));
  });
}

/// Gram[n][m] = <g_n, g_m> for 0 <= n, m <= n_max, with the node count
/// from auto_node_count.
inline ComplexMatrix sobolev_gram(const HypParams& params, int n_max) {
  check_cap(n_max, "sobolev_gram");
  const SobolevForm form = build_sobolev_form(params);
  const LinDiffOp R = form.as_operator();
  const int N = auto_node_count(n_max, form.rho);
  const auto nodes = circle_nodes(N);
  const auto g = gn_by_recurrence(params, n_max);

  // values[n][j] = (R g_n)(z_j)
  std::vector<std::vector<Complex>> values(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Poly Rg = op_apply(R, g[n]);
    values[n].reserve(nodes.size());
    for (auto z : nodes) values[n].push_back(poly_eval(Rg, z));
  }

  ComplexMatrix gram(g.size(), std::vector<Complex>(g.size()));
  for (std::size_t n = 0; n < g.size(); ++n)
    for (std::size_t m = 0; m < g.size(); ++m) {
      Complex acc{};
      for (std::size_t j = 0; j < nodes.size(); ++j)
        acc += values[n][j] * std::conj(values[m][j]);
      gram[n][m] = acc / static_cast<double>(N);
    }
  return gram;
}

struct GramDiagnostics {
  double max_diagonal = 0.0;
  double off_diagonal_ratio = 0.0;  // max |G[n][m]|, n != m, over max diagonal
  double diagonal_rel_error = 0.0;  // max |G[n][n] |kappa_n|^2 - 1|
  double hermitian_error = 0.0;     // max |G[n][m] - conj(G[m][n])| over max diagonal
};

inline GramDiagnostics diagnose_gram(const HypParams& params, const ComplexMatrix& gram) {
  GramDiagnostics d;
  const std::size_t size = gram.size();
  for (std::size_t n = 0; n < size; ++n)
    d.max_diagonal = std::max(d.max_diagonal, std::abs(gram[n][n]));
  double off = 0.0, herm = 0.0;
  for (std::size_t n = 0; n < size; ++n) {
    const double k = std::abs(kappa(params, static_cast<int>(n)));
    d.diagonal_rel_error = std::max(d.diagonal_rel_error, std::abs(gram[n][n] * (k * k) - 1.0));
    for (std::size_t m = 0; m < size; ++m) {
      herm = std::max(herm, std::abs(gram[n][m] - std::conj(gram[m][n])));
      if (m != n) off = std::max(off, std::abs(gram[n][m]));
    }
  }
  if (d.max_diagonal > 0.0) {
    d.off_diagonal_ratio = off / d.max_diagonal;
    d.hermitian_error = herm / d.max_diagonal;
  }
  return d;
}

}  // namespace hypersum
