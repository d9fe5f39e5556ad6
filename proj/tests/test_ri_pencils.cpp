#include "test_util.hpp"

#include <numbers>

namespace hs = hypersum;
using hs::Complex;
using hs::HypParams;
using hs::Poly;
using hypersum::testing::poly_near;

namespace {

hs::JacobiPencil worked_pencil(int rows) {
  return hs::JacobiPencil(std::vector<double>(rows, 0.0), std::vector<double>(rows, 1.0),
                          std::vector<double>(rows, 0.0), std::vector<double>(rows, 0.0),
                          std::vector<double>(rows, 1.0), 1.0, 0.0);
}

}  // namespace

TEST(RIGenerate, FirstStepIgnoresLambdaOne) {
  hs::RIRecurrence rec{{Complex(2.0, 1.0)}, {Complex(99.0)}, {0.0}};
  const auto s = hs::ri_generate(rec, 1);
  EXPECT_TRUE(poly_near(s.P[1], {Complex(-2.0, -1.0), 1.0}, 0.0));
}

TEST(RIGenerate, HandRecurrence) {
  hs::RIRecurrence rec{{-1.0, -2.0}, {0.0, 1.0}, {0.0, 0.0}};
  const auto s = hs::ri_generate(rec, 2);
  EXPECT_TRUE(poly_near(s.P[2], {2.0, 2.0, 1.0}, 0.0));
  EXPECT_TRUE(s.validity.ok());
}

TEST(RIGenerate, ValidityFlagsVanishingPnAtAn) {
  // c_1 = a_2 makes P_1(a_2) = 0.
  hs::RIRecurrence rec{{3.0, 1.0, 1.0}, {0.0, 1.0, 1.0}, {0.0, 3.0, 0.0}};
  const auto s = hs::ri_generate(rec, 3);
  EXPECT_FALSE(s.validity.pn_at_an_nonzero);
  EXPECT_TRUE(s.validity.lambda_nonzero);
}

TEST(RIGenerate, ValidityFlagsZeroLambda) {
  hs::RIRecurrence rec{{1.0, 1.0, 1.0}, {0.0, 2.0, 0.0}, {0.0, 0.0, 0.0}};
  const auto s = hs::ri_generate(rec, 3);
  EXPECT_FALSE(s.validity.lambda_nonzero);
}

TEST(RIGenerate, SequenceExhaustion) {
  hs::RIRecurrence rec{{1.0}, {0.0}, {0.0}};
  EXPECT_THROW(hs::ri_generate(rec, 2), hs::DomainError);
}

TEST(TFraction, ExponentialCoefficients) {
  const auto rec = hs::tfraction_from_hyp(HypParams{}, 6);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(rec.c_at(n), Complex(-n));
    EXPECT_EQ(rec.lambda_at(n), Complex(n - 1));
    EXPECT_EQ(rec.a_at(n), Complex(0.0));
  }
}

TEST(TFraction, ValueAtZeroIsMonicPrefactor) {
  const HypParams P({0.5}, {2.0, Complex(1.0, 1.0)});
  const auto s = hs::ri_generate(hs::tfraction_from_hyp(P, 10), 10);
  EXPECT_TRUE(s.validity.ok());
  for (int n = 0; n <= 10; ++n) {
    Complex want = std::tgamma(n + 1.0);
    for (auto b : P.b()) want *= hs::pochhammer(b, n);
    for (auto a : P.a()) want /= hs::pochhammer(a, n);
    EXPECT_LE(std::abs(hs::poly_eval(s.P[n], 0.0) - want), 1e-12 * std::abs(want));
  }
}

TEST(TFraction, RandomDrawsReproduceMonic) {
  hs::Rng rng(70);
  for (int i = 0; i < 200; ++i) {
    const auto P = hs::draw_params(rng);
    const auto s = hs::ri_generate(hs::tfraction_from_hyp(P, 25), 25);
    const auto G = hs::Gn_by_recurrence(P, 25);
    EXPECT_TRUE(s.validity.ok());
    for (int n = 0; n <= 25; ++n) {
      EXPECT_LE(hs::rel_coeff_distance(s.P[n], G[n]), 1e-12);
      EXPECT_EQ(s.P[n].leading(), Complex(1.0));
    }
  }
}

TEST(Pencil, InitialData) {
  const hs::JacobiPencil pen({0.0}, {1.0}, {0.0}, {0.0}, {1.0}, 1.5, -0.25);
  const auto p = hs::pencil_polynomials(pen, 1);
  EXPECT_EQ(p[0], Poly{1.0});
  EXPECT_EQ(p[1], (Poly{-0.25, 1.5}));
}

TEST(Pencil, WorkedExample) {
  const auto pen = worked_pencil(3);
  const auto p = hs::pencil_polynomials(pen, 4);
  EXPECT_EQ(p[2], Poly::monomial(2));
  EXPECT_LE(hs::pencil_residual(pen, p, 2.0, 3), 1e-10);
  EXPECT_LE(hs::pencil_residual(pen, p, 0.0, 3), 1e-10);
}

TEST(Pencil, PerturbationShowsUpInRowZero) {
  const auto pen = worked_pencil(3);
  auto p = hs::pencil_polynomials(pen, 4);
  p[2] = p[2] + Poly{1.0};
  EXPECT_NEAR(hs::pencil_residual(pen, p, 2.0, 1), 1.0, 1e-14);
}

TEST(Pencil, ConstraintsValidated) {
  EXPECT_THROW(hs::JacobiPencil({0.0}, {0.0}, {0.0}, {0.0}, {1.0}, 1.0, 0.0), hs::DomainError);
  EXPECT_THROW(hs::JacobiPencil({0.0}, {1.0}, {0.0}, {0.0}, {-1.0}, 1.0, 0.0), hs::DomainError);
  EXPECT_THROW(hs::JacobiPencil({0.0}, {1.0}, {0.0}, {0.0}, {1.0}, 0.0, 0.0), hs::DomainError);
  EXPECT_THROW(hs::pencil_polynomials(worked_pencil(2), 5), hs::DomainError);
  const auto pen = worked_pencil(3);
  const auto p = hs::pencil_polynomials(pen, 3);
  EXPECT_THROW(hs::pencil_residual(pen, p, 1.0, 3), hs::DomainError);
}

TEST(Pencil, RandomPencilsSatisfyFiveTermRelation) {
  hs::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const int N = hs::uniform_int(rng, 2, 12);
    const auto pen = hs::draw_pencil(rng, N - 1);
    const auto p = hs::pencil_polynomials(pen, N);
    for (int n = 0; n <= N; ++n) {
      EXPECT_EQ(p[n].degree(), n);
      EXPECT_GT(p[n].leading().real(), 0.0);
      EXPECT_EQ(p[n].leading().imag(), 0.0);
    }
    for (int t = 0; t < 20; ++t) {
      const Complex lam(hs::uniform(rng, -3.0, 3.0), hs::uniform(rng, -1.0, 1.0));
      EXPECT_LE(hs::pencil_residual(pen, p, lam, N - 1),
                1e-10 * hs::pencil_residual_scale(pen, p, lam, N - 1));
    }
  }
}

TEST(Chebyshev, Examples) {
  EXPECT_NEAR(hs::chebyshev_eval(hs::ChebKind::First, 2, 0.5), -0.5, 1e-16);
  EXPECT_NEAR(hs::chebyshev_eval(hs::ChebKind::Second, 2, 0.5), 0.0, 1e-16);
  EXPECT_NEAR(hs::chebyshev_eval(hs::ChebKind::First, 3, std::cos(std::numbers::pi / 3)), -1.0, 1e-15);
}

TEST(Chebyshev, TrigDefinitions) {
  for (int k = 0; k <= 20; ++k)
    for (double t : {0.1, 0.7, 1.3, 2.9}) {
      EXPECT_NEAR(hs::chebyshev_eval(hs::ChebKind::First, k, std::cos(t)), std::cos(k * t), 1e-13);
      EXPECT_NEAR(hs::chebyshev_eval(hs::ChebKind::Second, k, std::cos(t)),
                  std::sin((k + 1) * t) / std::sin(t), 1e-12);
    }
}

TEST(KernelDecompose, Examples) {
  const hs::PowerSeriesCoeffs ones(std::vector<Complex>(4, 1.0));
  auto dec = hs::kernel_decompose(ones, 1);
  EXPECT_EQ(dec.t_coeffs, (std::vector<double>{1.0, 1.0}));

  const hs::PowerSeriesCoeffs ex({1.0, 1.0, 0.5});
  dec = hs::kernel_decompose(ex, 0);
  EXPECT_EQ(dec.u_coeffs, (std::vector<double>{1.0}));

  const hs::PowerSeriesCoeffs d({1.0, 2.0, 3.0});
  dec = hs::kernel_decompose(d, 1);
  EXPECT_EQ(dec.t_coeffs, (std::vector<double>{1.0, 2.0}));
  EXPECT_EQ(dec.u_coeffs, (std::vector<double>{2.0, 3.0}));
  const auto err = hs::kernel_identity_error(d, 1, std::numbers::pi / 2);
  EXPECT_LE(err.re_error, 1e-15);
  EXPECT_LE(err.im_error, 1e-15);
}

TEST(KernelDecompose, RejectsNonPositive) {
  EXPECT_THROW(hs::kernel_decompose(hs::PowerSeriesCoeffs({1.0, -1.0, 2.0}), 1), hs::DomainError);
  EXPECT_THROW(hs::kernel_decompose(hs::PowerSeriesCoeffs({1.0, Complex(1, 1), 2.0}), 1),
               hs::DomainError);
  EXPECT_THROW(hs::kernel_decompose(hs::PowerSeriesCoeffs({1.0, 1.0}), 1), hs::DomainError);
}

TEST(KernelDecompose, RandomPositiveSequences) {
  hs::Rng rng(72);
  for (int i = 0; i < 100; ++i) {
    const int n = hs::uniform_int(rng, 0, 20);
    const auto d = hs::draw_positive_series(rng, n + 2);
    for (int j = 0; j < 32; ++j) {
      const double tau = hs::uniform(rng, 0.0, std::numbers::pi);
      const auto e = hs::kernel_identity_error(d, n, tau);
      EXPECT_LE(e.re_error, 1e-10);
      EXPECT_LE(e.im_error, 1e-10);
    }
  }
}
