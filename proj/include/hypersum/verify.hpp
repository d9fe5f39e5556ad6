#pragma once

// Identity checks for one parameter set, shared by the CLI `verify`
// command and the tests. Each check measures a worst-case residual and
// compares it with a fixed threshold.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersum/diff_ops.hpp"
#include "hypersum/hyp_sums.hpp"
#include "hypersum/pfq.hpp"
#include "hypersum/random.hpp"
#include "hypersum/ri_pencils.hpp"
#include "hypersum/roots.hpp"
#include "hypersum/sobolev.hpp"

namespace hypersum {

namespace tol {
inline constexpr double kRecurrence = 1e-10;
inline constexpr double kGenericSums = 1e-12;
inline constexpr double kOde = 1e-9;
inline constexpr double kGramOffDiagonal = 1e-10;
inline constexpr double kGramDiagonal = 1e-9;
inline constexpr double kGramHermitian = 1e-12;
inline constexpr double kQuadratureExact = 1e-14;
inline constexpr double kCircleRep = 1e-8;
inline constexpr double kAxisRep = 1e-10;
inline constexpr double kAxisQuadrature = 1e-6;
inline constexpr double kRootModulusSlack = 1e-9;
inline constexpr double kRootReconstruction = 1e-8;
inline constexpr double kEnestromKakeyaSlack = 1e-9;
inline constexpr double kRIFraction = 1e-12;
inline constexpr double kPencil = 1e-10;
inline constexpr double kKernel = 1e-10;
}  // namespace tol

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n, CheckStatus s = CheckStatus::Pass, std::string d = {})
      : name(std::move(n)), status(s), detail(std::move(d)) {}

  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  /// (metric, measured, threshold); threshold < 0 marks a reported-only value.
  struct Metric {
    std::string name;
    double measured = 0.0;
    double threshold = -1.0;
  };
  std::vector<Metric> metrics;

  void require(std::string metric, double measured, double threshold) {
    // NaN never passes
    if (!(measured <= threshold)) status = CheckStatus::Fail;
    metrics.push_back({std::move(metric), measured, threshold});
  }
  void require_true(std::string metric, bool ok) {
    if (!ok) status = CheckStatus::Fail;
    metrics.push_back({std::move(metric), ok ? 1.0 : 0.0, 1.0});
  }
  void report(std::string metric, double measured) {
    metrics.push_back({std::move(metric), measured, -1.0});
  }
};

struct VerifyConfig {
  HypParams params;
  int n_max = 10;
  std::uint64_t seed = 0;
  int draws = 200;
};

/// Thrown by a check whose preconditions the parameters do not meet.
class PreconditionUnmet : public DomainError {
public:
  using DomainError::DomainError;
};

inline CheckResult check_recurrence(const VerifyConfig& cfg) {
  CheckResult r{"recurrence"};
  const auto& P = cfg.params;
  const auto g_rec = gn_by_recurrence(P, cfg.n_max);
  const auto G_rec = Gn_by_recurrence(P, cfg.n_max);
  const auto sums = generic_partial_sums(PowerSeriesCoeffs::from_hyp(P, cfg.n_max), cfg.n_max);
  double g_err = 0.0, G_err = 0.0, f_err = 0.0, F_err = 0.0, g0 = 0.0, diff = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const Poly g = gn_direct(P, n);
    const Poly G = Gn_monic(P, n);
    g_err = std::max(g_err, max_coeffwise_rel_distance(g, g_rec[n]));
    G_err = std::max(G_err, rel_coeff_distance(G, G_rec[n]));
    f_err = std::max(f_err, rel_coeff_distance(g, sums.f[n]));
    F_err = std::max(F_err, rel_coeff_distance(G, sums.F[n]));
    g0 = std::max(g0, std::abs(poly_eval(g, 0.0) - 1.0));
    if (n > 0) {
      const Poly d = g - gn_direct(P, n - 1);
      diff = std::max(diff, rel_coeff_distance(d, Poly::monomial(n, hyp_coeff(P, n))));
    }
  }
  r.require("g_recurrence_vs_direct", g_err, tol::kRecurrence);
  r.require("G_recurrence_vs_monic", G_err, tol::kRecurrence);
  r.require("generic_f_vs_g", f_err, tol::kGenericSums);
  r.require("generic_F_vs_G", F_err, tol::kGenericSums);
  r.require("g_at_zero_minus_one", g0, 0.0);
  r.require("g_difference_vs_xi_monomial", diff, 0.0);
  return r;
}

inline CheckResult check_ode(const VerifyConfig& cfg) {
  CheckResult r{"ode"};
  double ode = 0.0, mono = 0.0, off = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    ode = std::max(ode, verify_ode(cfg.params, n).scaled_error);
    const auto img = check_r_image(cfg.params, n);
    mono = std::max(mono, img.monomial_error);
    off = std::max(off, img.off_monomial_mass);
  }
  r.require("ode_scaled_residual", ode, tol::kOde);
  r.require("r_image_monomial_error", mono, tol::kOde);
  r.require("r_image_off_monomial_mass", off, tol::kOde);
  r.require("order_R_minus_rho", std::abs(build_R(cfg.params).order() - cfg.params.rho()), 0.0);
  return r;
}

/// Worst deviation of the equispaced rule from orthonormality on z^k, k < N/2.
inline double quadrature_monomial_error(int N) {
  double worst = 0.0;
  for (int k = 0; 2 * k < N; ++k)
    for (int m = 0; k + m < N; ++m) {
      const Complex v = circle_quadrature(N, [&](Complex z) {
        return std::pow(z, k) * std::conj(std::pow(z, m));
      });
      worst = std::max(worst, std::abs(v - (k == m ? 1.0 : 0.0)));
    }
  return worst;
}

inline CheckResult check_sobolev(const VerifyConfig& cfg) {
  CheckResult r{"sobolev"};
  const auto gram = sobolev_gram(cfg.params, cfg.n_max);
  const auto d = diagnose_gram(cfg.params, gram);
  r.require("gram_off_diagonal_ratio", d.off_diagonal_ratio, tol::kGramOffDiagonal);
  r.require("gram_diagonal_vs_kappa", d.diagonal_rel_error, tol::kGramDiagonal);
  r.require("gram_hermitian", d.hermitian_error, tol::kGramHermitian);
  r.require("quadrature_monomials",
            quadrature_monomial_error(auto_node_count(cfg.n_max, cfg.params.rho())),
            tol::kQuadratureExact);
  r.report("max_diagonal", d.max_diagonal);
  return r;
}

inline CheckResult check_circle_rep(const VerifyConfig& cfg) {
  if (cfg.params.p() > cfg.params.q())
    throw PreconditionUnmet("circle-rep: representation requires p <= q");
  CheckResult r{"circle-rep"};
  Rng rng(cfg.seed);
  const auto samples = sample_pfq_on_circle(cfg.params, kDefaultCircleNodes);
  double worst = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const Poly g = gn_direct(cfg.params, n);
    for (int s = 0; s < 16; ++s) {
      const double tau = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      worst = std::max(worst, std::abs(integral_rep_circle(samples, n, tau) -
                                       poly_eval(g, std::polar(1.0, tau))));
    }
  }
  r.require("circle_rep_abs_error", worst, tol::kCircleRep);
  return r;
}

/// |g_n(x)|, floored at 1e-4 sum_k |xi_k| |x|^k so zero crossings such as
/// g_1(-1) = 0 for 0F0 are measured against the size of the summed terms.
inline double axis_rep_scale(const Poly& g, Complex value, double x) {
  return std::max(std::abs(value), 1e-4 * poly_eval_abs(g, std::abs(x)));
}

inline CheckResult check_axis_rep(const VerifyConfig& cfg) {
  CheckResult r{"axis-rep"};
  double exact = 0.0, quad = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    const Poly g = gn_direct(cfg.params, n);
    for (double x : {-0.1, -1.0, -10.0}) {
      const Complex ref = poly_eval(g, x);
      const double scale = axis_rep_scale(g, ref, x);
      exact = std::max(exact, std::abs(integral_rep_negative_axis(cfg.params, n, x) - ref) / scale);
      quad = std::max(quad,
                      std::abs(integral_rep_negative_axis_quadrature(cfg.params, n, x) - ref) / scale);
    }
  }
  r.require("axis_rep_termwise_rel_error", exact, tol::kAxisRep);
  r.require("axis_rep_quadrature_rel_error", quad, tol::kAxisQuadrature);
  return r;
}

struct RootCheckStats {
  double min_modulus = std::numeric_limits<double>::infinity();
  double min_pair_ratio = std::numeric_limits<double>::infinity();  // min pair distance / max root modulus
  double reconstruction = 0.0;
  double ek_violation = 0.0;
  bool ray_root = false;
  bool all_simple = true;
};

inline void accumulate_root_stats(const HypParams& params, int n, RootCheckStats& s) {
  const Poly g = gn_direct(params, n);
  const auto rep = location_report(params, n);
  s.min_modulus = std::min(s.min_modulus, rep.min_modulus);
  s.min_pair_ratio = std::min(s.min_pair_ratio, rep.min_pair_distance / max_modulus(rep.roots));
  s.all_simple = s.all_simple && rep.simple;
  s.ray_root = s.ray_root || rep.positive_real_root_found;
  s.reconstruction =
      std::max(s.reconstruction, rel_coeff_distance(poly_from_roots(rep.roots, g.leading()), g));
  if (rep.ek_annulus) {
    for (auto z : rep.roots) {
      const double m = std::abs(z);
      s.ek_violation = std::max({s.ek_violation, rep.ek_annulus->r_min - m, m - rep.ek_annulus->r_max});
    }
  }
}

inline CheckResult check_roots(const VerifyConfig& cfg) {
  if (auto why = localization_violation(cfg.params))
    throw PreconditionUnmet("roots: " + *why);
  CheckResult r{"roots"};
  RootCheckStats s;
  for (int n = 2; n <= cfg.n_max; ++n) accumulate_root_stats(cfg.params, n, s);
  if (cfg.n_max >= 2) {
    r.require("one_minus_min_modulus", 1.0 - s.min_modulus, tol::kRootModulusSlack);
    r.require_true("all_roots_simple", s.all_simple);
    r.require_true("no_root_near_ray_1_inf", !s.ray_root);
    r.require("reconstruction_rel_error", s.reconstruction, tol::kRootReconstruction);
    r.require("enestrom_kakeya_violation", s.ek_violation, tol::kEnestromKakeyaSlack);
    r.report("min_root_modulus", s.min_modulus);
  }
  if (cfg.n_max >= 1) {
    const auto rep1 = location_report(cfg.params, 1);
    r.report("n1_root_modulus", rep1.min_modulus);
    r.report("n1_boundary_roots", rep1.boundary_roots);
  }
  return r;
}

inline CheckResult check_rifrac(const VerifyConfig& cfg) {
  CheckResult r{"rifrac"};
  const auto seq = ri_generate(tfraction_from_hyp(cfg.params, cfg.n_max), cfg.n_max);
  const auto G = Gn_by_recurrence(cfg.params, cfg.n_max);
  double err = 0.0;
  bool monic = true;
  for (int n = 0; n <= cfg.n_max; ++n) {
    err = std::max(err, max_coeffwise_rel_distance(seq.P[n], G[n]));
    monic = monic && seq.P[n].leading() == Complex(1.0);
  }
  r.require("ri_vs_G_rel_error", err, tol::kRIFraction);
  r.require_true("P_n_monic", monic);
  r.require_true("lambda_next_nonzero", seq.validity.lambda_nonzero);
  r.require_true("P_n_at_a_n_nonzero", seq.validity.pn_at_an_nonzero);
  return r;
}

/// Pencil polynomial degree-n with positive leading coefficient, and
/// worst scaled residual of the five-term rows.
struct PencilStats {
  double scaled_residual = 0.0;
  bool degrees_ok = true;
};

inline PencilStats pencil_stats(const JacobiPencil& pencil, int N, Rng& rng, int lambdas) {
  PencilStats s;
  const auto polys = pencil_polynomials(pencil, N);
  for (int n = 0; n <= N; ++n) {
    const Poly& pn = polys[n];
    s.degrees_ok = s.degrees_ok && pn.degree() == n && pn.leading().imag() == 0.0 &&
                   pn.leading().real() > 0.0;
  }
  const int rows = N - 1;
  for (int i = 0; i < lambdas; ++i) {
    const Complex lam(uniform(rng, -3.0, 3.0), uniform(rng, -1.0, 1.0));
    const double res = pencil_residual(pencil, polys, lam, rows);
    const double scale = pencil_residual_scale(pencil, polys, lam, rows);
    s.scaled_residual = std::max(s.scaled_residual, scale > 0.0 ? res / scale : res);
  }
  return s;
}

/// J5 zero except gamma_n = 1, J3 with a_k = 1, b_k = 0, alpha = 1, beta = 0.
inline JacobiPencil worked_example_pencil(int rows) {
  const auto r = static_cast<std::size_t>(rows);
  return JacobiPencil(std::vector<double>(r, 0.0), std::vector<double>(r, 1.0),
                      std::vector<double>(r, 0.0), std::vector<double>(r, 0.0),
                      std::vector<double>(r, 1.0), 1.0, 0.0);
}

inline CheckResult check_pencil(const VerifyConfig& cfg) {
  CheckResult r{"pencil"};
  Rng rng(cfg.seed + 1);
  constexpr int N = 12;
  PencilStats worst;
  const int pencils = std::max(1, std::min(cfg.draws, 50));
  for (int i = 0; i < pencils; ++i) {
    const auto pencil = draw_pencil(rng, N);
    const auto s = pencil_stats(pencil, N, rng, 20);
    worst.scaled_residual = std::max(worst.scaled_residual, s.scaled_residual);
    worst.degrees_ok = worst.degrees_ok && s.degrees_ok;
  }
  const auto example = pencil_polynomials(worked_example_pencil(3), 2);
  r.require("scaled_residual", worst.scaled_residual, tol::kPencil);
  r.require_true("degree_and_positive_leading", worst.degrees_ok);
  r.require_true("worked_example_p2_is_lambda_squared", example[2] == Poly::monomial(2));
  return r;
}

inline CheckResult check_kernel(const VerifyConfig& cfg) {
  CheckResult r{"kernel"};
  Rng rng(cfg.seed + 2);
  const int n = std::min(cfg.n_max, 20);
  double worst = 0.0;
  auto sweep = [&](const PowerSeriesCoeffs& d) {
    for (int s = 0; s < 32; ++s) {
      const double tau = uniform(rng, 0.0, std::numbers::pi);
      const auto e = kernel_identity_error(d, n, tau);
      worst = std::max({worst, e.re_error, e.im_error});
    }
  };
  for (int i = 0; i < std::max(1, std::min(cfg.draws, 50)); ++i)
    sweep(draw_positive_series(rng, n + 2));
  r.require("chebyshev_identity_error", worst, tol::kKernel);
  return r;
}

inline CheckResult check_convergence(const VerifyConfig& cfg) {
  CheckResult r{"convergence"};
  const auto cls = classify(cfg.params);
  if (cls == DomainClass::Divergent)
    throw PreconditionUnmet("convergence: p > q + 1 series diverges");
  std::vector<Complex> samples = circle_nodes(64);
  std::vector<int> ns;
  for (int n = 0; n <= cfg.n_max; ++n) ns.push_back(n);
  const auto rep = convergence_report(cfg.params, ns, samples);
  const auto& last = rep.rows.back();
  r.report("sup_error_at_n_max", last.sup_error);
  r.report("monotone", rep.monotone ? 1.0 : 0.0);
  if (cls == DomainClass::Entire) {
    // |g_n - pFq| on the unit circle is bounded by the series tail.
    const auto xi = hyp_coeffs(cfg.params, kDegreeCap);
    double tail = 0.0;
    for (std::size_t k = static_cast<std::size_t>(cfg.n_max) + 1; k < xi.size(); ++k)
      tail += std::abs(xi[k]);
    double scale = 0.0;
    for (auto c : xi) scale += std::abs(c);
    r.require("sup_error_minus_tail_bound",
              last.sup_error - tail, 64.0 * std::numeric_limits<double>::epsilon() * scale);
  } else {
    r.detail = "p = q + 1: measured only";
    r.report("pfq_converged_on_circle", last.pfq_converged ? 1.0 : 0.0);
  }
  return r;
}

struct NamedCheck {
  const char* name;
  CheckResult (*run)(const VerifyConfig&);
};

inline const std::vector<NamedCheck>& all_checks() {
  static const std::vector<NamedCheck> checks = {
      {"recurrence", check_recurrence}, {"ode", check_ode},
      {"sobolev", check_sobolev},       {"circle-rep", check_circle_rep},
      {"axis-rep", check_axis_rep},     {"roots", check_roots},
      {"rifrac", check_rifrac},         {"pencil", check_pencil},
      {"kernel", check_kernel},         {"convergence", check_convergence},
  };
  return checks;
}

/// Runs the named checks ("all" selects every check). Under "all" a check
/// whose preconditions fail is reported as skipped; when selected by name
/// it propagates PreconditionUnmet.
inline std::vector<CheckResult> run_checks(const VerifyConfig& cfg,
                                           const std::vector<std::string>& names) {
  const bool all = std::find(names.begin(), names.end(), "all") != names.end();
  std::vector<CheckResult> out;
  for (const auto& c : all_checks()) {
    const bool selected = all || std::find(names.begin(), names.end(), c.name) != names.end();
    if (!selected) continue;
    try {
      out.push_back(c.run(cfg));
    } catch (const PreconditionUnmet& e) {
      if (!all) throw;
      CheckResult skipped{c.name, CheckStatus::Skipped, e.what()};
      out.push_back(std::move(skipped));
    }
  }
  return out;
}

inline bool is_known_check(const std::string& name) {
  if (name == "all") return true;
  for (const auto& c : all_checks())
    if (name == c.name) return true;
  return false;
}

}  // namespace hypersum
