#include "test_util.hpp"

namespace hs = hypersum;
using hs::Complex;
using hs::Poly;
using hypersum::testing::complex_near;
using hypersum::testing::poly_near;

TEST(PolyEval, ZeroPolynomialIsZeroEverywhere) {
  EXPECT_EQ(hs::poly_eval(Poly{}, Complex(3.0, -2.0)), Complex{});
}

TEST(PolyEval, ExponentialPartialSumAtOne) {
  EXPECT_TRUE(complex_near(hs::poly_eval(Poly{1.0, 1.0, 0.5}, 1.0), 2.5, 1e-15));
}

TEST(PolyEval, QuadraticVanishesAtItsRoot) {
  EXPECT_TRUE(complex_near(hs::poly_eval(Poly{2.0, 2.0, 1.0}, Complex(-1.0, 1.0)), 0.0, 1e-15));
}

TEST(PolyMul, OneIsIdentity) {
  const Poly p{Complex(1, 2), 3.0, Complex(0, -1)};
  EXPECT_EQ(hs::poly_mul(Poly{1.0}, p), p);
}

TEST(PolyMul, DifferenceOfSquares) {
  EXPECT_TRUE(poly_near(hs::poly_mul(Poly{1.0, 1.0}, Poly{1.0, -1.0}), {1.0, 0.0, -1.0}, 0.0));
}

TEST(PolyMul, ZeroAnnihilates) {
  EXPECT_TRUE(hs::poly_mul(Poly{}, Poly{1.0, 2.0}).is_zero());
  EXPECT_TRUE(hs::poly_mul(Poly{1.0, 2.0}, Poly{}).is_zero());
}

TEST(PolyDerivative, ConstantGoesToZero) { EXPECT_TRUE(hs::poly_derivative(Poly{4.0}).is_zero()); }

TEST(PolyDerivative, Cube) {
  EXPECT_TRUE(poly_near(hs::poly_derivative(Poly::monomial(3)), {0.0, 0.0, 3.0}, 0.0));
}

TEST(PolyDerivative, ExponentialPartialSum) {
  EXPECT_TRUE(poly_near(hs::poly_derivative(Poly{1.0, 1.0, 0.5}), {1.0, 1.0}, 0.0));
}

TEST(Pochhammer, ZeroLengthIsOne) {
  for (Complex c : {Complex(0.0), Complex(-3.0), Complex(2.5, -1.0)})
    EXPECT_EQ(hs::pochhammer(c, 0), Complex(1.0));
}

TEST(Pochhammer, HandProducts) {
  EXPECT_EQ(hs::pochhammer(2.0, 3), Complex(24.0));
  EXPECT_EQ(hs::pochhammer(-0.5, 2), Complex(-0.25));
}

TEST(Pochhammer, NegativeLengthThrows) { EXPECT_THROW(hs::pochhammer(1.0, -1), hs::DomainError); }

TEST(PolyInvariants, TrailingZerosAreTrimmed) {
  const Poly p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_TRUE(Poly(std::vector<Complex>{0.0, 0.0}).is_zero());
}

TEST(PolyInvariants, TinyLeadingCoefficientIsKept) {
  // 1/25! is far below 1e-14 relative to the constant term but is a genuine
  // coefficient of the exponential partial sum.
  const Poly g = hs::gn_direct(hs::HypParams{}, 25);
  EXPECT_EQ(g.degree(), 25);
}

TEST(PolyInvariants, NonFiniteCoefficientRejected) {
  EXPECT_THROW((Poly{1.0, std::nan("")}), hs::DomainError);
  EXPECT_THROW((Poly{Complex(1.0, INFINITY)}), hs::DomainError);
}

TEST(PolyInvariants, IndexPastDegreeIsZero) {
  const Poly p{1.0, 2.0};
  EXPECT_EQ(p[7], Complex{});
}

TEST(PolyProperty, EvalIsMultiplicative) {
  hs::Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = hypersum::testing::random_poly(rng, hs::uniform_int(rng, 0, 20));
    const Poly q = hypersum::testing::random_poly(rng, hs::uniform_int(rng, 0, 20));
    const Complex z = std::polar(hs::uniform(rng, 0.0, 1.5), hs::uniform(rng, 0.0, 6.3));
    const Complex lhs = hs::poly_eval(hs::poly_mul(p, q), z);
    const Complex rhs = hs::poly_eval(p, z) * hs::poly_eval(q, z);
    const double scale = hs::poly_eval_abs(p, std::abs(z)) * hs::poly_eval_abs(q, std::abs(z));
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * scale) << "trial " << trial;
  }
}

TEST(PolyProperty, DegreeOfProduct) {
  hs::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int dp = hs::uniform_int(rng, 0, 20), dq = hs::uniform_int(rng, 0, 20);
    const Poly p = hypersum::testing::random_poly(rng, dp);
    const Poly q = hypersum::testing::random_poly(rng, dq);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ(hs::poly_mul(p, q).degree(), p.degree() + q.degree());
  }
}

TEST(PolyProperty, PochhammerStepIsExact) {
  hs::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex c = hs::draw_parameter(rng);
    const int k = hs::uniform_int(rng, 0, 40);
    EXPECT_EQ(hs::pochhammer(c, k + 1), hs::pochhammer(c, k) * (c + static_cast<double>(k)));
  }
}

TEST(PolyProperty, ProductRule) {
  hs::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = hypersum::testing::random_poly(rng, hs::uniform_int(rng, 0, 12));
    const Poly q = hypersum::testing::random_poly(rng, hs::uniform_int(rng, 0, 12));
    const Poly lhs = hs::poly_derivative(hs::poly_mul(p, q));
    const Poly rhs = hs::poly_mul(hs::poly_derivative(p), q) + hs::poly_mul(p, hs::poly_derivative(q));
    if (lhs.is_zero() && rhs.is_zero()) continue;
    EXPECT_LE(hs::rel_coeff_distance(lhs, rhs), 1e-12) << "trial " << trial;
  }
}

TEST(PolyDistance, NormwiseAndCoefficientwise) {
  const Poly p{1.0, 1e-8};
  const Poly q{1.0, 2e-8};
  EXPECT_NEAR(hs::rel_coeff_distance(p, q), 1e-8, 1e-20);
  EXPECT_NEAR(hs::max_coeffwise_rel_distance(p, q), 0.5, 1e-12);
}
