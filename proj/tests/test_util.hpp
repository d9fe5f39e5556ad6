#pragma once

#include <gtest/gtest.h>

#include <complex>
#include <vector>

#include "hypersum/hypersum.hpp"

namespace hypersum::testing {

inline ::testing::AssertionResult complex_near(Complex got, Complex want, double tol) {
  if (std::abs(got - want) <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got (" << got.real() << ", " << got.imag() << "), want ("
                                       << want.real() << ", " << want.imag() << "), |diff| "
                                       << std::abs(got - want) << " > " << tol;
}

inline ::testing::AssertionResult poly_near(const Poly& got, const std::vector<Complex>& want,
                                            double tol) {
  if (got.size() != want.size())
    return ::testing::AssertionFailure() << "size " << got.size() << " vs " << want.size();
  for (std::size_t k = 0; k < want.size(); ++k)
    if (std::abs(got[k] - want[k]) > tol * std::max(1.0, std::abs(want[k])))
      return ::testing::AssertionFailure()
             << "coefficient " << k << ": (" << got[k].real() << ", " << got[k].imag()
             << ") vs (" << want[k].real() << ", " << want[k].imag() << ")";
  return ::testing::AssertionSuccess();
}

inline Poly random_poly(Rng& rng, int degree, double radius = 1.0) {
  std::vector<Complex> cs;
  for (int k = 0; k <= degree; ++k)
    cs.emplace_back(std::polar(uniform(rng, 0.0, radius), uniform(rng, 0.0, 6.283185307179586)));
  return Poly(std::move(cs));
}

}  // namespace hypersum::testing
