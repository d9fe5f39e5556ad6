// hypersum: build, evaluate and verify partial sums of generalized
// hypergeometric series from the command line.
//
// Exit codes: 0 success, 2 usage or parse error, 3 domain or precondition
// error, 4 a verification check failed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersum/hypersum.hpp"
#include "hypersum/io.hpp"

namespace {

using hypersum::Complex;
using hypersum::HypParams;
using hypersum::Poly;
using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3, kVerifyFailed = 4 };

struct CommonOptions {
  std::optional<int> p, q;
  std::string a, b;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  int draws = 200;
  double tol = -1.0;
};

struct Output {
  std::string text;
  int code = kOk;
};

// Parse failure tied to the flag that carried the bad text.
hypersum::ParseError flag_error(const std::string& flag, const std::exception& e) {
  return hypersum::ParseError(flag + ": " + e.what());
}

std::vector<Complex> parse_flag_list(const std::string& flag, const std::string& text) {
  try {
    return hypersum::parse_complex_list(text);
  } catch (const hypersum::ParseError& e) {
    throw flag_error(flag, e);
  }
}

HypParams build_params(const CommonOptions& o) {
  auto a = parse_flag_list("--a", o.a);
  auto b = parse_flag_list("--b", o.b);
  if (o.p && *o.p != static_cast<int>(a.size()))
    throw hypersum::ParseError("--p " + std::to_string(*o.p) + " does not match " +
                               std::to_string(a.size()) + " values given to --a");
  if (o.q && *o.q != static_cast<int>(b.size()))
    throw hypersum::ParseError("--q " + std::to_string(*o.q) + " does not match " +
                               std::to_string(b.size()) + " values given to --b");
  return HypParams(std::move(a), std::move(b));
}

Json cjson(Complex z) { return Json::array({z.real(), z.imag()}); }

Json poly_json(const Poly& p) {
  Json arr = Json::array();
  for (auto c : p.coeffs()) arr.push_back(cjson(c));
  return arr;
}

Json params_json(const HypParams& P) {
  Json a = Json::array(), b = Json::array();
  for (auto c : P.a()) a.push_back(cjson(c));
  for (auto c : P.b()) b.push_back(cjson(c));
  return Json{{"p", P.p()}, {"q", P.q()}, {"a", a}, {"b", b}};
}

std::string params_label(const HypParams& P) {
  std::string s = "a=";
  for (std::size_t j = 0; j < P.a().size(); ++j)
    s += (j ? "|" : "") + hypersum::format_complex(P.a()[j]);
  s += ";b=";
  for (std::size_t j = 0; j < P.b().size(); ++j)
    s += (j ? "|" : "") + hypersum::format_complex(P.b()[j]);
  return s;
}

Json document(const char* command, const HypParams& P, Json results, Json diagnostics) {
  return Json{{"command", command},     {"params", params_json(P)},
              {"results", std::move(results)}, {"diagnostics", std::move(diagnostics)},
              {"version", kVersion}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

class Csv {
public:
  explicit Csv(std::initializer_list<const char*> header) {
    bool first = true;
    for (auto h : header) {
      out_ << (first ? "" : ",") << h;
      first = false;
    }
    out_ << "\n";
  }
  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << "\n";
  }
  std::string str() const { return out_.str(); }

private:
  static std::string cell(double v) { return hypersum::format_double(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  static std::string cell(bool v) { return v ? "1" : "0"; }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  std::ostringstream out_;
};

bool want_csv(const CommonOptions& o) { return o.format == "csv"; }

// ---- gen -------------------------------------------------------------------

Output cmd_gen(const CommonOptions& o, int n, bool monic) {
  const HypParams P = build_params(o);
  hypersum::check_cap(n, "gen");
  const Poly g = hypersum::gn_direct(P, n);
  std::vector<Complex> deltas;
  for (int k = 0; k <= n; ++k) deltas.push_back(hypersum::delta_k(P, k));
  const Complex kap = hypersum::kappa(P, n);
  const auto R = hypersum::build_R(P);
  std::optional<Poly> G;
  if (monic) G = hypersum::Gn_monic(P, n);

  if (want_csv(o)) {
    Csv csv({"object", "index", "re", "im"});
    for (std::size_t k = 0; k < g.size(); ++k) csv.row("g", k, g[k].real(), g[k].imag());
    if (G)
      for (std::size_t k = 0; k < G->size(); ++k) csv.row("G", k, (*G)[k].real(), (*G)[k].imag());
    for (std::size_t k = 0; k < deltas.size(); ++k)
      csv.row("delta", k, deltas[k].real(), deltas[k].imag());
    csv.row("kappa", n, kap.real(), kap.imag());
    for (int l = 0; l <= R.order(); ++l) {
      const Poly c = R.coeff(l);
      for (std::size_t k = 0; k < c.size(); ++k)
        csv.row("R_c" + std::to_string(l), k, c[k].real(), c[k].imag());
    }
    return {csv.str()};
  }

  Json results;
  results["n"] = n;
  results["g"] = poly_json(g);
  if (G) results["G"] = poly_json(*G);
  Json d = Json::array();
  for (auto v : deltas) d.push_back(cjson(v));
  results["delta"] = d;
  results["kappa"] = cjson(kap);
  Json rc = Json::array();
  for (int l = 0; l <= R.order(); ++l) rc.push_back(poly_json(R.coeff(l)));
  results["R_coeffs"] = rc;
  Json diag{{"rho", P.rho()}, {"domain_class", hypersum::to_string(hypersum::classify(P))}};
  return {dump(document("gen", P, results, diag))};
}

// ---- eval ------------------------------------------------------------------

Output cmd_eval(const CommonOptions& o, int n, const std::string& z_text) {
  const HypParams P = build_params(o);
  const auto zs = parse_flag_list("--z", z_text);
  const Poly g = hypersum::gn_direct(P, n);
  const Poly G = hypersum::Gn_monic(P, n);

  struct Row {
    Complex z, g, G;
    std::optional<Complex> pfq;
    std::string note;
  };
  std::vector<Row> rows;
  for (auto z : zs) {
    Row r{z, hypersum::poly_eval(g, z), hypersum::poly_eval(G, z), std::nullopt, ""};
    try {
      r.pfq = hypersum::pfq_eval(P, z).value;
    } catch (const std::exception& e) {
      r.note = e.what();
    }
    rows.push_back(std::move(r));
  }

  if (want_csv(o)) {
    Csv csv({"z_re", "z_im", "g_re", "g_im", "G_re", "G_im", "pfq_re", "pfq_im"});
    const double nan = std::nan("");
    for (const auto& r : rows)
      csv.row(r.z.real(), r.z.imag(), r.g.real(), r.g.imag(), r.G.real(), r.G.imag(),
              r.pfq ? r.pfq->real() : nan, r.pfq ? r.pfq->imag() : nan);
    return {csv.str()};
  }
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j{{"z", cjson(r.z)}, {"g", cjson(r.g)}, {"G", cjson(r.G)}};
    j["pfq"] = r.pfq ? cjson(*r.pfq) : Json(nullptr);
    if (!r.note.empty()) j["pfq_note"] = r.note;
    arr.push_back(j);
  }
  Json results{{"n", n}, {"values", arr}};
  Json diag{{"domain_class", hypersum::to_string(hypersum::classify(P))}};
  return {dump(document("eval", P, results, diag))};
}

// ---- roots -----------------------------------------------------------------

Output cmd_roots(const CommonOptions& o, int n) {
  const HypParams P = build_params(o);
  const double tol = o.tol > 0.0 ? o.tol : 1e-8;
  const auto rep = hypersum::analyze_roots(hypersum::gn_direct(P, n), tol);
  const auto violation = hypersum::localization_violation(P);

  if (want_csv(o)) {
    Csv csv({"index", "re", "im", "modulus"});
    for (std::size_t k = 0; k < rep.roots.size(); ++k)
      csv.row(k, rep.roots[k].real(), rep.roots[k].imag(), std::abs(rep.roots[k]));
    return {csv.str()};
  }
  Json roots = Json::array();
  for (auto r : rep.roots) roots.push_back(cjson(r));
  Json results{{"n", n},
               {"roots", roots},
               {"min_pair_distance", rep.min_pair_distance},
               {"min_modulus", rep.min_modulus},
               {"simple", rep.simple},
               {"positive_real_root_found", rep.positive_real_root_found},
               {"boundary_roots", rep.boundary_roots}};
  results["ek_annulus"] = rep.ek_annulus
                              ? Json::array({rep.ek_annulus->r_min, rep.ek_annulus->r_max})
                              : Json(nullptr);
  Json diag{{"localization_conditions", violation ? *violation : std::string("satisfied")}};
  return {dump(document("roots", P, results, diag))};
}

// ---- verify ----------------------------------------------------------------

Output cmd_verify(const CommonOptions& o, int n_max, const std::vector<std::string>& checks) {
  const HypParams P = build_params(o);
  for (const auto& c : checks)
    if (!hypersum::is_known_check(c)) throw hypersum::ParseError("--check: unknown check '" + c + "'");
  hypersum::check_cap(n_max, "verify");
  hypersum::VerifyConfig cfg{P, n_max, o.seed, o.draws};
  const auto results = hypersum::run_checks(cfg, checks);

  int code = kOk;
  for (const auto& r : results)
    if (r.status == hypersum::CheckStatus::Fail) code = kVerifyFailed;

  if (want_csv(o)) {
    Csv csv({"check", "status", "metric", "measured", "threshold"});
    for (const auto& r : results) {
      if (r.metrics.empty()) csv.row(r.name, hypersum::to_string(r.status), "", "", "");
      for (const auto& m : r.metrics)
        csv.row(r.name, hypersum::to_string(r.status), m.name, m.measured,
                m.threshold < 0.0 ? std::string("") : hypersum::format_double(m.threshold));
    }
    return {csv.str(), code};
  }
  Json arr = Json::array();
  for (const auto& r : results) {
    Json metrics = Json::array();
    for (const auto& m : r.metrics) {
      Json jm{{"name", m.name}, {"measured", m.measured}};
      jm["threshold"] = m.threshold < 0.0 ? Json(nullptr) : Json(m.threshold);
      metrics.push_back(jm);
    }
    Json jr{{"name", r.name}, {"status", hypersum::to_string(r.status)}, {"metrics", metrics}};
    if (!r.detail.empty()) jr["detail"] = r.detail;
    arr.push_back(jr);
  }
  Json res{{"n_max", n_max}, {"checks", arr}, {"verdict", code == kOk ? "PASS" : "FAIL"}};
  Json diag{{"seed", o.seed}, {"draws", o.draws}};
  return {dump(document("verify", P, res, diag)), code};
}

// ---- pencil ----------------------------------------------------------------

struct PencilOptions {
  std::string j3_diag, j3_off, j5_diag, j5_off1, j5_off2;
  double alpha = 1.0, beta = 0.0;
  std::string lambdas = "2";
};

std::vector<double> parse_real_flag(const std::string& flag, const std::string& text) {
  try {
    return hypersum::parse_real_list(text);
  } catch (const hypersum::ParseError& e) {
    throw flag_error(flag, e);
  }
}

Output cmd_pencil(const CommonOptions& o, const PencilOptions& po, int n) {
  if (n < 2) throw hypersum::DomainError("pencil: --n must be at least 2");
  const bool given = !(po.j3_diag.empty() && po.j3_off.empty() && po.j5_diag.empty() &&
                       po.j5_off1.empty() && po.j5_off2.empty());
  hypersum::Rng rng(o.seed);
  const hypersum::JacobiPencil pencil =
      given ? hypersum::JacobiPencil(parse_real_flag("--j3-diag", po.j3_diag),
                                     parse_real_flag("--j3-off", po.j3_off),
                                     parse_real_flag("--j5-diag", po.j5_diag),
                                     parse_real_flag("--j5-off1", po.j5_off1),
                                     parse_real_flag("--j5-off2", po.j5_off2), po.alpha, po.beta)
            : hypersum::draw_pencil(rng, n - 1);
  const auto polys = hypersum::pencil_polynomials(pencil, n);
  const auto lambdas = parse_flag_list("--lambda", po.lambdas);
  const int rows = n - 1;

  struct Row {
    Complex lambda;
    double residual, scale;
  };
  std::vector<Row> rows_out;
  for (auto lam : lambdas)
    rows_out.push_back({lam, hypersum::pencil_residual(pencil, polys, lam, rows),
                        hypersum::pencil_residual_scale(pencil, polys, lam, rows)});

  if (want_csv(o)) {
    Csv csv({"lambda_re", "lambda_im", "residual", "scale"});
    for (const auto& r : rows_out) csv.row(r.lambda.real(), r.lambda.imag(), r.residual, r.scale);
    return {csv.str()};
  }
  Json p = Json::array();
  for (const auto& poly : polys) p.push_back(poly_json(poly));
  Json res = Json::array();
  for (const auto& r : rows_out)
    res.push_back(Json{{"lambda", cjson(r.lambda)}, {"residual", r.residual}, {"scale", r.scale}});
  Json pen{{"j3_diag", pencil.j3_diag()}, {"j3_offdiag", pencil.j3_offdiag()},
           {"j5_diag", pencil.j5_diag()}, {"j5_off1", pencil.j5_off1()},
           {"j5_off2", pencil.j5_off2()}, {"alpha", pencil.alpha()},
           {"beta", pencil.beta()}};
  Json results{{"n", n}, {"pencil", pen}, {"p", p}, {"residuals", res}};
  Json diag{{"source", given ? "flags" : "random"}, {"seed", o.seed}, {"rows", rows}};
  return {dump(document("pencil", HypParams{}, results, diag))};
}

// ---- sweep -----------------------------------------------------------------

struct Vary {
  bool upper;       // a_j or b_j
  std::size_t index;  // zero-based
  std::vector<Complex> values;
};

Vary parse_vary(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq < 2 || (arg[0] != 'a' && arg[0] != 'b'))
    throw hypersum::ParseError("--vary: expected NAME=v1,v2,... with NAME like a1 or b2, got '" +
                               arg + "'");
  Vary v;
  v.upper = arg[0] == 'a';
  std::vector<int> idx;
  try {
    idx = hypersum::parse_int_list(arg.substr(1, eq - 1));
  } catch (const hypersum::ParseError& e) {
    throw flag_error("--vary", e);
  }
  if (idx.size() != 1 || idx[0] < 1) throw hypersum::ParseError("--vary: bad parameter index in '" + arg + "'");
  v.index = static_cast<std::size_t>(idx[0] - 1);
  v.values = parse_flag_list("--vary", arg.substr(eq + 1));
  return v;
}

unsigned thread_budget(std::size_t cells) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERSUM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(cells, 1)));
}

/// Runs fn(i) for i < count on a small pool; results are stored by index so
/// output order does not depend on scheduling.
template <typename Fn>
std::vector<std::string> parallel_rows(std::size_t count, Fn&& fn) {
  std::vector<std::string> out(count);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned threads = thread_budget(count);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (!e.empty()) throw hypersum::DomainError("sweep: " + e);
  return out;
}

Output cmd_sweep(const CommonOptions& o, const std::string& kind,
                 const std::vector<std::string>& vary_args, const std::string& n_list_text) {
  const HypParams base = build_params(o);
  std::vector<Vary> vary;
  for (const auto& s : vary_args) {
    vary.push_back(parse_vary(s));
    const auto& v = vary.back();
    const std::size_t limit = v.upper ? base.a().size() : base.b().size();
    if (v.index >= limit)
      throw hypersum::ParseError("--vary: parameter index out of range in '" + s + "'");
  }
  std::vector<int> n_list;
  try {
    n_list = hypersum::parse_int_list(n_list_text);
  } catch (const hypersum::ParseError& e) {
    throw flag_error("--n-list", e);
  }
  for (int n : n_list) hypersum::check_cap(n, "sweep");

  // Cartesian product; the first --vary changes slowest.
  std::vector<HypParams> grid;
  std::size_t cells = 1;
  for (const auto& v : vary) cells *= v.values.size();
  for (std::size_t c = 0; c < cells; ++c) {
    auto a = base.a();
    auto b = base.b();
    std::size_t rem = c;
    for (std::size_t i = vary.size(); i-- > 0;) {
      const auto& v = vary[i];
      const Complex value = v.values[rem % v.values.size()];
      rem /= v.values.size();
      (v.upper ? a : b)[v.index] = value;
    }
    grid.emplace_back(std::move(a), std::move(b));
  }

  if (kind == "convergence") {
    Csv csv({"cell", "params", "n", "sup_error", "pfq_converged"});
    const auto samples = hypersum::circle_nodes(64);
    const auto rows = parallel_rows(grid.size(), [&](std::size_t c) {
      const auto rep = hypersum::convergence_report(grid[c], n_list, samples);
      std::string s;
      for (const auto& r : rep.rows)
        s += std::to_string(c) + "," + params_label(grid[c]) + "," + std::to_string(r.n) + "," +
             hypersum::format_double(r.sup_error) + "," + (r.pfq_converged ? "1" : "0") + "\n";
      return s;
    });
    std::string out = csv.str();
    for (const auto& r : rows) out += r;
    return {out};
  }
  if (kind == "roots") {
    Csv csv({"cell", "params", "n", "min_modulus", "min_pair_distance", "boundary_roots",
             "ray_root", "simple"});
    const double tol = o.tol > 0.0 ? o.tol : 1e-8;
    const auto rows = parallel_rows(grid.size(), [&](std::size_t c) {
      std::string s;
      for (int n : n_list) {
        if (n < 1) throw hypersum::DomainError("roots sweep needs n >= 1");
        const auto rep = hypersum::analyze_roots(hypersum::gn_direct(grid[c], n), tol);
        s += std::to_string(c) + "," + params_label(grid[c]) + "," + std::to_string(n) + "," +
             hypersum::format_double(rep.min_modulus) + "," +
             hypersum::format_double(rep.min_pair_distance) + "," +
             std::to_string(rep.boundary_roots) + "," + (rep.positive_real_root_found ? "1" : "0") +
             "," + (rep.simple ? "1" : "0") + "\n";
      }
      return s;
    });
    std::string out = csv.str();
    for (const auto& r : rows) out += r;
    return {out};
  }
  if (kind == "gram") {
    Csv csv({"cell", "params", "n_max", "off_diagonal_ratio", "diagonal_rel_error",
             "max_diagonal"});
    const auto rows = parallel_rows(grid.size(), [&](std::size_t c) {
      std::string s;
      for (int n : n_list) {
        const auto d = hypersum::diagnose_gram(grid[c], hypersum::sobolev_gram(grid[c], n));
        s += std::to_string(c) + "," + params_label(grid[c]) + "," + std::to_string(n) + "," +
             hypersum::format_double(d.off_diagonal_ratio) + "," +
             hypersum::format_double(d.diagonal_rel_error) + "," +
             hypersum::format_double(d.max_diagonal) + "\n";
      }
      return s;
    });
    std::string out = csv.str();
    for (const auto& r : rows) out += r;
    return {out};
  }
  throw hypersum::ParseError("--kind: expected convergence, roots or gram, got '" + kind + "'");
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--p", o.p, "number of upper parameters (checked against --a)");
  cmd->add_option("--q", o.q, "number of lower parameters (checked against --b)");
  cmd->add_option("--a", o.a, "upper parameters, comma-separated complex literals");
  cmd->add_option("--b", o.b, "lower parameters, comma-separated complex literals");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "write the document to FILE instead of stdout");
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
  cmd->add_option("--draws", o.draws, "number of random draws for randomized checks");
  cmd->add_option("--tol", o.tol, "tolerance override (root residual)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial sums of generalized hypergeometric series"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  int n = 5, n_max = 10;
  bool monic = false;
  std::string z_text;
  std::vector<std::string> checks{"all"};
  PencilOptions po;
  int pencil_n = 12;
  std::string kind = "convergence";
  std::vector<std::string> vary;
  std::string n_list = "0,1,2,3,4,5,6,7,8,9,10";

  auto* gen = app.add_subcommand("gen", "coefficients of g_n, G_n, delta_k, kappa_n and R");
  add_common(gen, common);
  gen->add_option("--n", n, "degree");
  gen->add_flag("--monic", monic, "also emit the monic G_n");

  auto* eval = app.add_subcommand("eval", "evaluate g_n, G_n and pFq at points");
  add_common(eval, common);
  eval->add_option("--n", n, "degree");
  eval->add_option("--z", z_text, "evaluation points, comma-separated complex literals")->required();

  auto* roots = app.add_subcommand("roots", "zeros of g_n and their localization");
  add_common(roots, common);
  roots->add_option("--n", n, "degree");

  auto* verify = app.add_subcommand("verify", "run identity checks");
  add_common(verify, common);
  verify->add_option("--n-max", n_max, "largest degree checked");
  verify->add_option("--check", checks,
                     "recurrence|ode|sobolev|circle-rep|axis-rep|roots|rifrac|pencil|kernel|"
                     "convergence|all")
      ->delimiter(',');

  auto* pencil = app.add_subcommand("pencil", "polynomials of a Jacobi-type pencil");
  add_common(pencil, common);
  pencil->add_option("--n", pencil_n, "largest polynomial index");
  pencil->add_option("--j3-diag", po.j3_diag, "J3 diagonal b_k");
  pencil->add_option("--j3-off", po.j3_off, "J3 off-diagonal a_k > 0");
  pencil->add_option("--j5-diag", po.j5_diag, "J5 diagonal alpha_n");
  pencil->add_option("--j5-off1", po.j5_off1, "J5 first off-diagonal beta_n");
  pencil->add_option("--j5-off2", po.j5_off2, "J5 second off-diagonal gamma_n > 0");
  pencil->add_option("--alpha", po.alpha, "p_1 = alpha lambda + beta, alpha > 0");
  pencil->add_option("--beta", po.beta, "p_1 = alpha lambda + beta");
  pencil->add_option("--lambda", po.lambdas, "points where the relations are checked");

  auto* sweep = app.add_subcommand("sweep", "CSV tables over parameter grids");
  add_common(sweep, common);
  sweep->add_option("--kind", kind, "convergence|roots|gram");
  sweep->add_option("--vary", vary, "NAME=v1,v2,... (repeatable), NAME is a1..ap or b1..bq");
  sweep->add_option("--n-list", n_list, "degrees, comma-separated");
  common.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Output result;
  try {
    if (*gen) result = cmd_gen(common, n, monic);
    else if (*eval) result = cmd_eval(common, n, z_text);
    else if (*roots) result = cmd_roots(common, n);
    else if (*verify) result = cmd_verify(common, n_max, checks);
    else if (*pencil) result = cmd_pencil(common, po, pencil_n);
    else if (*sweep) result = cmd_sweep(common, kind, vary, n_list);
  } catch (const hypersum::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const hypersum::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const hypersum::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }

  if (common.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << common.out << "\n";
      return kUsage;
    }
    f << result.text;
  }
  return result.code;
}
