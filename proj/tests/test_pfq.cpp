#include "test_util.hpp"

#include <numbers>

namespace hs = hypersum;
using hs::Complex;
using hs::HypParams;
using hs::Poly;
using hypersum::testing::complex_near;
using hypersum::testing::poly_near;

TEST(PfqEval, Examples) {
  const auto e = hs::pfq_eval(HypParams{}, 1.0);
  EXPECT_TRUE(complex_near(e.value, std::numbers::e, 1e-15));
  EXPECT_EQ(e.domain_class, hs::DomainClass::Entire);
  const auto geo = hs::pfq_eval(HypParams({1.0}, {}), 0.5);
  EXPECT_TRUE(complex_near(geo.value, 2.0, 1e-15));
  EXPECT_EQ(geo.domain_class, hs::DomainClass::UnitDisk);
  EXPECT_THROW(hs::pfq_eval(HypParams({1.0}, {}), 1.5), hs::DomainError);
}

TEST(PfqEval, DivergentClassOnlyAtOrigin) {
  const HypParams P({1.0, 2.0}, {});
  EXPECT_EQ(hs::classify(P), hs::DomainClass::Divergent);
  EXPECT_EQ(hs::pfq_eval(P, 0.0).value, Complex(1.0));
  EXPECT_THROW(hs::pfq_eval(P, 1e-3), hs::DomainError);
}

TEST(PfqEval, TermCapReported) {
  hs::PfqOptions opts;
  opts.term_cap = 5;
  EXPECT_THROW(hs::pfq_eval(HypParams{}, 3.0, opts), hs::ConvergenceError);
}

TEST(PfqEval, BesselTypeClosedForm) {
  // 0F1(; 1/2; -x^2/4) = cos x
  for (double x : {0.3, 1.0, 2.5}) {
    const auto v = hs::pfq_eval(HypParams({}, {0.5}), -x * x / 4.0);
    EXPECT_TRUE(complex_near(v.value, std::cos(x), 1e-14));
  }
}

TEST(PfqEval, CapNeverHitInsideRadiusTwo) {
  hs::Rng rng(55);
  for (int i = 0; i < 200; ++i) {
    const auto P = hs::draw_entire_params(rng);
    const Complex z = std::polar(hs::uniform(rng, 0.0, 2.0), hs::uniform(rng, 0.0, 6.3));
    EXPECT_NO_THROW(hs::pfq_eval(P, z));
  }
}

TEST(DirichletSum, Examples) {
  EXPECT_EQ(hs::dirichlet_sum(1.0, 6), Complex(7.0));
  for (Complex u : {Complex(0.3, 2.0), Complex(-4.0), Complex(1.0)})
    EXPECT_EQ(hs::dirichlet_sum(u, 0), Complex(1.0));
  EXPECT_TRUE(complex_near(hs::dirichlet_sum(2.0, 2), 7.0, 1e-15));
}

TEST(DirichletSum, BranchesAgreeNearOne) {
  hs::Rng rng(56);
  for (int i = 0; i < 200; ++i) {
    const double r = std::exp(hs::uniform(rng, std::log(1.01e-6), std::log(1e-4)));
    const Complex u = 1.0 - std::polar(r, hs::uniform(rng, 0.0, 6.3));
    const int n = hs::uniform_int(rng, 0, 30);
    const Complex closed = (1.0 - std::pow(u, n + 1)) / (1.0 - u);
    Complex direct{}, pw = 1.0;
    for (int k = 0; k <= n; ++k, pw *= u) direct += pw;
    EXPECT_LE(std::abs(closed - direct), 1e-10 * std::abs(direct));
    EXPECT_LE(std::abs(hs::dirichlet_sum(u, n) - direct), 1e-10 * std::abs(direct));
  }
}

TEST(CircleRep, Examples) {
  const HypParams P{};
  EXPECT_TRUE(complex_near(hs::integral_rep_circle(P, 0, 0.7), 1.0, 1e-12));
  EXPECT_TRUE(complex_near(hs::integral_rep_circle(HypParams({}, {1.0}), 1, 0.0), 2.0, 1e-12));
  const Complex w = std::polar(1.0, std::numbers::pi / 3.0);
  EXPECT_TRUE(complex_near(hs::integral_rep_circle(P, 3, std::numbers::pi / 3.0),
                           1.0 + w + w * w / 2.0 + w * w * w / 6.0, 1e-12));
}

TEST(CircleRep, RefusesPGreaterThanQ) {
  EXPECT_THROW(hs::integral_rep_circle(HypParams({2.0}, {}), 2, 0.0), hs::DomainError);
}

TEST(CircleRep, RandomDraws) {
  hs::Rng rng(57);
  for (int i = 0; i < 20; ++i) {
    const auto P = hs::draw_entire_params(rng);
    const auto samples = hs::sample_pfq_on_circle(P, hs::kDefaultCircleNodes);
    for (int n = 0; n <= 10; ++n)
      for (int t = 0; t < 4; ++t) {
        const double tau = hs::uniform(rng, 0.0, 2.0 * std::numbers::pi);
        const Complex want = hs::poly_eval(hs::gn_direct(P, n), std::polar(1.0, tau));
        EXPECT_LE(std::abs(hs::integral_rep_circle(samples, n, tau) - want), 1e-8);
      }
  }
}

TEST(TerminatingPoly, Examples) {
  const HypParams P{};
  EXPECT_TRUE(poly_near(hs::terminating_pfq_poly(P, 0), {1.0}, 0.0));
  EXPECT_TRUE(poly_near(hs::terminating_pfq_poly(P, 1), {1.0, 0.5}, 1e-16));
  hs::Rng rng(58);
  for (int i = 0; i < 20; ++i) {
    const auto Q = hs::draw_params(rng);
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(hs::terminating_pfq_poly(Q, n).degree(), n);
  }
}

TEST(TerminatingPoly, MatchesPochhammerOracle) {
  const HypParams P({Complex(0.5, 1.0)}, {2.5});
  for (int n = 0; n <= 10; ++n) {
    const Poly t = hs::terminating_pfq_poly(P, n);
    for (int k = 0; k <= n; ++k) {
      const Complex want = hs::pochhammer(-n, k) * hs::pochhammer(P.a()[0], k) /
                           (hs::pochhammer(-n - 1.0, k) * hs::pochhammer(P.b()[0], k) *
                            std::tgamma(k + 1.0));
      EXPECT_LE(std::abs(t[k] - want), 1e-13 * std::abs(want));
    }
  }
}

TEST(AxisRep, Examples) {
  const HypParams P{};
  EXPECT_TRUE(complex_near(hs::integral_rep_negative_axis(P, 0, -3.0), 1.0, 1e-15));
  EXPECT_TRUE(complex_near(hs::integral_rep_negative_axis(P, 1, -1.0), 0.0, 1e-15));
  EXPECT_TRUE(complex_near(hs::integral_rep_negative_axis(P, 2, -2.0), 1.0, 1e-14));
  EXPECT_THROW(hs::integral_rep_negative_axis(P, 2, 0.0), hs::DomainError);
  EXPECT_THROW(hs::integral_rep_negative_axis(P, 2, 1.0), hs::DomainError);
}

TEST(AxisRep, RandomDrawsTermwiseAndQuadrature) {
  hs::Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    const auto P = hs::draw_params(rng);
    for (int n = 0; n <= 20; ++n)
      for (double x : {-0.1, -1.0, -10.0}) {
        const Poly g = hs::gn_direct(P, n);
        const Complex want = hs::poly_eval(g, x);
        const double scale = hs::axis_rep_scale(g, want, x);
        EXPECT_LE(std::abs(hs::integral_rep_negative_axis(P, n, x) - want), 1e-10 * scale);
        EXPECT_LE(std::abs(hs::integral_rep_negative_axis_quadrature(P, n, x) - want), 1e-6 * scale);
      }
  }
}

TEST(Convergence, ExponentialOnCircle) {
  const auto rep = hs::convergence_report(HypParams{}, {5, 10, 15, 20}, hs::circle_nodes(64));
  EXPECT_TRUE(rep.monotone);
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    EXPECT_LT(rep.rows[i].sup_error, rep.rows[i - 1].sup_error);
  EXPECT_LT(rep.rows.back().sup_error, 1e-15);
}

TEST(Convergence, GeometricTail) {
  const auto rep = hs::convergence_report(HypParams({1.0}, {}), {10}, {0.5});
  EXPECT_NEAR(rep.rows[0].sup_error, 2.0 * std::pow(0.5, 11), 1e-12);
}

TEST(Convergence, BoundaryFailureIsReportedNotThrown) {
  // 1F0(1;;z) on |z| = 1 is the divergent geometric series.
  const auto rep = hs::convergence_report(HypParams({1.0}, {}), {5, 10}, hs::circle_nodes(8));
  for (const auto& row : rep.rows) EXPECT_FALSE(row.pfq_converged);
}

TEST(Convergence, EntireCaseGoesBelowTolerance) {
  hs::Rng rng(60);
  for (int i = 0; i < 20; ++i) {
    const auto P = hs::draw_entire_params(rng);
    const auto rep = hs::convergence_report(P, {60}, hs::circle_nodes(32));
    const double scale = hs::poly_eval_abs(hs::gn_direct(P, 60), 1.0);
    EXPECT_LT(rep.rows[0].sup_error, 1e-12 * std::max(1.0, scale));
  }
}
