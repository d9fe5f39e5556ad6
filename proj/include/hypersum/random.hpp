#pragma once

// Seeded generators for the randomized identity checks.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hypersum/hyp_sums.hpp"
#include "hypersum/ri_pencils.hpp"

namespace hypersum {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Complex value with both parts in [-box, box], redrawn while it lies
/// within margin of {0, -1, -2, ...}.
inline Complex draw_parameter(Rng& rng, double box = 5.0, double margin = 1e-3) {
  for (;;) {
    const Complex c(uniform(rng, -box, box), uniform(rng, -box, box));
    bool near = false;
    for (int m = 0; m <= kDegreeCap && !near; ++m) near = std::abs(c + static_cast<double>(m)) < margin;
    if (!near) return c;
  }
}

/// 0 <= p, q <= max_pq, complex parameters as in draw_parameter.
inline HypParams draw_params(Rng& rng, int max_pq = 3) {
  const int p = uniform_int(rng, 0, max_pq), q = uniform_int(rng, 0, max_pq);
  std::vector<Complex> a, b;
  for (int j = 0; j < p; ++j) a.push_back(draw_parameter(rng));
  for (int j = 0; j < q; ++j) b.push_back(draw_parameter(rng));
  return HypParams(std::move(a), std::move(b));
}

/// As draw_params, restricted to p <= q.
inline HypParams draw_entire_params(Rng& rng, int max_pq = 3) {
  const int q = uniform_int(rng, 0, max_pq), p = uniform_int(rng, 0, q);
  std::vector<Complex> a, b;
  for (int j = 0; j < p; ++j) a.push_back(draw_parameter(rng));
  for (int j = 0; j < q; ++j) b.push_back(draw_parameter(rng));
  return HypParams(std::move(a), std::move(b));
}

/// Real parameters with p <= q, 0 < a_j <= b_j (j <= p), b_k >= 1 (k > p).
inline HypParams draw_localized_params(Rng& rng, int max_pq = 3) {
  const int q = uniform_int(rng, 0, max_pq), p = uniform_int(rng, 0, q);
  std::vector<Complex> a, b;
  for (int j = 0; j < p; ++j) {
    const double aj = uniform(rng, 0.05, 5.0);
    a.emplace_back(aj, 0.0);
    b.emplace_back(aj + uniform(rng, 0.0, 5.0), 0.0);
  }
  for (int k = p; k < q; ++k) b.emplace_back(uniform(rng, 1.0, 6.0), 0.0);
  return HypParams(std::move(a), std::move(b));
}

/// Entries in [-2, 2]; a_k, gamma_n and alpha in (0.1, 2].
inline JacobiPencil draw_pencil(Rng& rng, int rows) {
  std::vector<double> j3d, j3o, j5d, j5o1, j5o2;
  auto positive = [&] { return 2.0 - uniform(rng, 0.0, 1.9); };
  for (int k = 0; k < rows; ++k) {
    j3d.push_back(uniform(rng, -2.0, 2.0));
    j3o.push_back(positive());
    j5d.push_back(uniform(rng, -2.0, 2.0));
    j5o1.push_back(uniform(rng, -2.0, 2.0));
    j5o2.push_back(positive());
  }
  const double alpha = positive();
  const double beta = uniform(rng, -2.0, 2.0);
  return JacobiPencil(std::move(j3d), std::move(j3o), std::move(j5d), std::move(j5o1),
                      std::move(j5o2), alpha, beta);
}

/// Positive power series coefficients in (0, 3].
inline PowerSeriesCoeffs draw_positive_series(Rng& rng, int count) {
  std::vector<Complex> d;
  for (int k = 0; k < count; ++k) d.emplace_back(3.0 - uniform(rng, 0.0, 3.0), 0.0);
  return PowerSeriesCoeffs(std::move(d));
}

}  // namespace hypersum
