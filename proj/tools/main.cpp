#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qv/dsl.hpp"
#include "qv/presets.hpp"
#include "qv/report.hpp"
#include "qv/so3.hpp"

using namespace qv;

namespace {

struct Options {
  std::string preset = "sqo3";
  std::string file;
  double q = 0.5;
  int dim = 32;
  double tol = 1e-9;
  uint64_t seed = 1;
  std::string format = "text";
  int margin = 2;
  std::string action = "circle";
  uint64_t state_seed = 7;
  std::string kind;  // counterexample kind
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "deformation parameter in ]0,1[");
  cmd->add_option("--dim", o.dim, "truncation dimension / sample count");
  cmd->add_option("--tol", o.tol, "numeric tolerance");
  cmd->add_option("--seed", o.seed, "seed for all randomness");
  cmd->add_option("--format", o.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--margin", o.margin, "interior margin in units of max shift");
}

ordered_json mat_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j)
      row.push_back({m.at(i, j).real(), m.at(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

// diagonal representation of so3-classical from Haar-sampled group points
Rep rep_so3_samples(int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<cxd>> pts;
  for (int k = 0; k < n; ++k) {
    SPoint p = haar_spoint(rng);
    pts.push_back({p.s, p.t, p.r});
  }
  return rep_diag_points(builtin_presentation("so3-classical"), pts);
}

Rep rep_circle_samples(int n) {
  std::vector<std::vector<cxd>> pts;
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * 3.141592653589793238462643383279502884 * k / n;
    pts.push_back({cxd(std::cos(th), std::sin(th))});
  }
  return rep_diag_points(builtin_presentation("circle"), pts);
}

std::optional<Rep> make_rep(const std::string& preset, const Options& o) {
  if (preset == "sqo3") return rep_sqo3(o.q, o.dim, o.margin);
  if (preset == "sqo3-verbatim") {
    Rep r = rep_sqo3(o.q, o.dim, o.margin);
    r.pres = &builtin_presentation("sqo3-verbatim");
    return r;
  }
  if (preset == "qmap-powers") return rep_powers(o.q, o.dim, o.margin);
  if (preset == "qmap-m2") return rep_qmapm2(o.q, o.dim, o.margin);
  if (preset == "qmap-trace")
    return pushforward(map_trace_to_so3(), rep_so3_samples(o.dim, o.seed));
  if (preset == "so3-classical") return rep_so3_samples(o.dim, o.seed);
  if (preset == "circle") return rep_circle_samples(std::max(o.dim, 4));
  if (preset == "m2") return rep_m2();
  return std::nullopt;  // qmap-omega0: symbolic only (no faithful truncation)
}

std::optional<StateSpec> natural_state(const std::string& preset) {
  if (preset == "qmap-m2" || preset == "qmap-powers") return StateSpec::powers();
  if (preset == "qmap-trace") return StateSpec::trace();
  if (preset == "qmap-omega0") return StateSpec::omega0();
  return std::nullopt;
}

Report run_verify(const Options& o) {
  Report rep;
  rep.plan = {{"command", "verify"},
              {"preset", o.file.empty() ? o.preset : ""},
              {"file", o.file},
              {"q", o.q},
              {"dim", o.dim},
              {"tol", o.tol},
              {"seed", o.seed},
              {"margin", o.margin}};
  const Presentation* pres = nullptr;
  std::optional<ParsedSpec> parsed;
  std::optional<Rep> r;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw CLI::ValidationError("cannot open file: " + o.file);
    std::string src((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    parsed = parse_algebra_spec(
        src, [](const std::string& n) -> const Presentation& {
          return builtin_presentation(n);
        });
    pres = &parsed->pres;
  } else {
    pres = &builtin_presentation(o.preset);
    r = make_rep(o.preset, o);
  }
  const Rep* rp = r ? &*r : nullptr;
  if (rp) rep.checks.merge(check_relations(*rp, o.tol));
  if (pres->comult)
    rep.checks.merge(check_comultiplication(*pres, rp, o.tol, o.seed));
  if (pres->coaction) rep.checks.merge(check_coaction(*pres, rp, o.tol));
  if (o.file.empty())
    if (auto st = natural_state(o.preset))
      rep.checks.merge(check_state_preservation(*pres, *st, rp, o.tol));
  return rep;
}

Report run_replay(const Options& o) {
  Report rep;
  rep.plan = {{"command", "replay-proof"},
              {"q", o.q},
              {"dim", o.dim},
              {"tol", o.tol}};
  rep.checks = proof_replay(o.q, o.dim, o.tol);
  return rep;
}

Report run_classify(const Options& o) {
  Report rep;
  rep.plan = {{"command", "classify"},
              {"action", o.action},
              {"state-seed", o.state_seed},
              {"tol", o.tol},
              {"dim", o.dim}};
  ActionSpec a;
  a.preset = o.action;
  PipelineResult pr =
      classify_action_pipeline(a, o.tol, o.state_seed, o.dim == 32 ? 0 : o.dim);
  rep.checks = pr.report;
  rep.result = {{"q", pr.q},
                {"u", mat_json(pr.u)},
                {"target", pr.target},
                {"ergodic", pr.ergodic}};
  return rep;
}

Report run_derive(const Options& o) {
  Report rep;
  rep.plan = {{"command", "derive-constraints"}};
  auto d = derive_state_constraints();
  rep.checks = d.report;
  const Presentation& uni = builtin_presentation("qmap-m2");
  const Presentation& pow = builtin_presentation("qmap-powers");
  ordered_json subs = ordered_json::array();
  for (const Poly& p : d.substituted) subs.push_back(print_poly(p, pow));
  ordered_json extra = ordered_json::array();
  for (const Poly& p : d.extra) extra.push_back(print_poly(p, pow));
  rep.result = {{"alpha-constraint", print_poly(d.alpha_constraint, uni)},
                {"substituted", subs},
                {"quadratic-constraints", extra}};
  (void)o;
  return rep;
}

void add_entry(CheckReport& cr, const std::string& name, double residual,
               bool pass, const std::string& ctx) {
  CheckEntry e;
  e.name = name;
  e.residual = residual;
  e.status = pass ? CheckStatus::PassNumeric : CheckStatus::Fail;
  e.context = ctx;
  cr.add(std::move(e));
}

Report run_counterexample(const Options& o) {
  Report rep;
  rep.plan = {{"command", "counterexample"}, {"kind", o.kind}, {"dim", o.dim}};
  CheckReport& cr = rep.checks;
  if (o.kind == "ck") {
    CkExample e = ck_counterexample(o.dim >= 8 ? o.dim : 40);
    double q2 = e.q * e.q;
    std::vector<bool> keep(static_cast<size_t>(e.dim), true);
    keep[static_cast<size_t>(e.dim - 1)] = keep[static_cast<size_t>(e.dim - 2)] = false;
    auto irn = [&](const Mat& m) { return op_norm_cols(m, keep); };
    Mat K2 = e.K * e.K;
    add_entry(cr, "ck/q-choice", std::abs(q2 * q2 + q2 - 1.0),
              std::abs(q2 * q2 + q2 - 1.0) < 1e-13, "q^4 + q^2 = 1");
    add_entry(cr, "ck/hyp-A*A", irn(e.A.adjoint() * e.A - (e.K - K2)),
              irn(e.A.adjoint() * e.A - (e.K - K2)) < 1e-12, "A*A = K - K^2");
    add_entry(cr, "ck/hyp-C*C", irn(e.C.adjoint() * e.C - (e.K - K2)),
              irn(e.C.adjoint() * e.C - (e.K - K2)) < 1e-12, "C*C = K - K^2");
    Mat rhs = cxd(q2) * e.K - cxd(q2 * q2) * K2;
    add_entry(cr, "ck/hyp-AA*", irn(e.A * e.A.adjoint() - rhs),
              irn(e.A * e.A.adjoint() - rhs) < 1e-12, "AA* = q^2 K - q^4 K^2");
    add_entry(cr, "ck/hyp-CC*", irn(e.C * e.C.adjoint() - rhs),
              irn(e.C * e.C.adjoint() - rhs) < 1e-12, "CC* = q^2 K - q^4 K^2");
    add_entry(cr, "ck/hyp-AK", irn(e.A * e.K - cxd(q2) * (e.K * e.A)),
              irn(e.A * e.K - cxd(q2) * (e.K * e.A)) < 1e-12, "AK = q^2 KA");
    double gap = op_norm(e.C * e.K - cxd(q2) * (e.K * e.C));
    char ctx[96];
    std::snprintf(ctx, sizeof ctx, "||CK - q^2 KC|| = %.10f = q^9: conclusion fails without normality", gap);
    add_entry(cr, "ck/conclusion-fails", gap, gap > 0.05, ctx);
    bool threw = false;
    try {
      fuglede_putnam_check(e.K, e.C, 1.0, 1e-10);
    } catch (const HypothesisViolated&) {
      threw = true;
    }
    add_entry(cr, "ck/C-not-normal", threw ? 0.0 : 1.0, threw,
              "the commutation-transfer hypothesis (normality) is violated");
  } else if (o.kind == "q1") {
    FlipExample e = flip_counterexample(o.dim >= 8 ? o.dim : 128);
    Mat I = Mat::identity(e.grid);
    add_entry(cr, "flip/AK-commute", op_norm(e.A * e.K - e.K * e.A),
              op_norm(e.A * e.K - e.K * e.A) < 1e-14, "AK = KA exactly");
    add_entry(cr, "flip/AC-commute", op_norm(e.A * e.C - e.C * e.A),
              op_norm(e.A * e.C - e.C * e.A) < 1e-14, "AC = CA exactly");
    add_entry(cr, "flip/CK-flip", op_norm(e.C * e.K - (I - e.K) * e.C),
              op_norm(e.C * e.K - (I - e.K) * e.C) < 1e-14, "CK = (1-K)C exactly");
    double gap = op_norm(e.C * e.K - e.K * e.C);
    add_entry(cr, "flip/conclusion-fails", gap, gap > 0.1,
              "||CK - KC|| stays large: C need not commute with K");
  } else if (o.kind == "q0") {
    int h = o.dim >= 9 ? o.dim / 3 : 16;
    Rep r = rep_q0(h);
    const Presentation& pres = *r.pres;
    Mat I = Mat::identity(r.dim);
    for (size_t i = 0; i < pres.relations.size(); ++i) {
      Mat m = r.eval(pres.relations[i]);
      double nrm = op_norm(m);
      const std::string& nm = pres.relation_names[i];
      if (nm == "z1") {
        int defect_cols = 0;
        for (int j = 0; j < r.dim; ++j) {
          double cn = 0;
          for (int i2 = 0; i2 < r.dim; ++i2) cn += std::norm(m.at(i2, j));
          if (cn > 1e-24) ++defect_cols;
        }
        char ctx[96];
        std::snprintf(ctx, sizeof ctx,
                      "intentional defect: ||beta beta* - 1|| = 1 on %d of %d columns",
                      defect_cols, r.dim);
        add_entry(cr, "q0/defect-z1", std::abs(nrm - 1.0),
                  std::abs(nrm - 1.0) < 1e-12 && defect_cols == 2 * h, ctx);
      } else {
        add_entry(cr, "q0/holds-" + nm, nrm, nrm < 1e-14, "holds exactly");
      }
    }
    double bb = op_norm(r.mats[static_cast<size_t>(pres.gen_index("beta"))].adjoint() *
                            r.mats[static_cast<size_t>(pres.gen_index("beta"))] -
                        I);
    add_entry(cr, "q0/beta-not-unitary", bb, bb >= 1.0 - 1e-12,
              "||beta* beta - 1|| >= 1: beta is a proper coisometry");
    // the comultiplication of the q=0 quotient is consistent symbolically
    rep.checks.merge(check_comultiplication(pres, nullptr, o.tol, o.seed));
  } else {
    throw CLI::ValidationError("unknown counterexample kind: " + o.kind);
  }
  return rep;
}

Report run_list_checks() {
  Report rep;
  rep.plan = {{"command", "list-checks"}};
  ordered_json fams = ordered_json::array();
  auto add = [&](const char* name, const char* what) {
    fams.push_back({{"name", name}, {"what", what}});
  };
  add("<preset>/relation/<id>", "relation residual in a truncated representation");
  add("<preset>/comult-well-defined/<id>", "Delta(relation) rewrites/evaluates to zero");
  add("<preset>/coassoc/<gen>", "(Delta x id)Delta = (id x Delta)Delta");
  add("<preset>/counit-law/<gen>", "(eps x id)Delta = id = (id x eps)Delta, exact");
  add("<preset>/coaction-image/*", "Psi(n) satisfies the M2 relations");
  add("<preset>/coaction-square/*", "(Psi x id)Psi = (id x Delta)Psi");
  add("<preset>/coaction-counit", "(id x eps)Psi = id");
  add("<preset>/state-preservation/*", "(omega x id)Psi = omega(.) 1");
  add("<preset>/podles-density", "span of Psi(M2)(1 x B) has full expected dimension");
  add("hom/<src>-><tgt>/<id>", "generator map sends relations to zero");
  add("intertwine/<src>-><tgt>/*", "map intertwines coactions and comultiplications");
  add("derive/*", "state constraints force the displayed quotient presentation");
  add("images/rel-*", "relations of the embedded q-family generators");
  add("unitary/*", "entries of the defining corepresentation identity");
  add("step1/*, step2/*, step3/*, step4/*, stage/*", "intermediate identity chain");
  add("dotted/p*", "full relation list in the recovered generators");
  add("matrix/*", "4x4 corepresentation matrix: display agreement and unitarity");
  add("antipode/*", "antipode table inverts the corepresentation matrix");
  add("pipeline/*", "invariant state, ergodicity probe, classification");
  add("ck/*", "weighted-shift counterexample at q^4 + q^2 = 1");
  add("flip/*", "commutative q=1 flip counterexample");
  add("q0/*", "q=0 coisometry model with its localized defect");
  add("sqo3/redundancy/*", "bounded-rewriting evidence for dropped relations");
  rep.result = {{"checks", fams}};
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for q-deformed SO(3) symmetries of M2"};
  app.require_subcommand(1);
  Options o;

  CLI::App* verify = app.add_subcommand("verify", "check a presentation's structure");
  verify->add_option("--preset", o.preset, "builtin presentation id");
  verify->add_option("--file", o.file, "algebra spec file");
  add_common(verify, o);

  CLI::App* replay = app.add_subcommand("replay-proof", "replay the embedding identity chain");
  add_common(replay, o);

  CLI::App* classify = app.add_subcommand("classify", "classify a classical action on M2");
  classify->add_option("--action", o.action, "circle or so3-classical")
      ->check(CLI::IsMember({"circle", "so3-classical"}));
  classify->add_option("--state-seed", o.state_seed, "seed for the initial states");
  add_common(classify, o);

  CLI::App* derive = app.add_subcommand("derive-constraints", "derive the state-preservation quotient");
  add_common(derive, o);

  CLI::App* cex = app.add_subcommand("counterexample", "run a counterexample model");
  cex->add_option("kind", o.kind, "ck, q1, or q0")->required();
  add_common(cex, o);

  CLI::App* list = app.add_subcommand("list-checks", "list check families");
  list->add_option("--format", o.format, "output format: json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (verify->parsed()) rep = run_verify(o);
    else if (replay->parsed()) rep = run_replay(o);
    else if (classify->parsed()) rep = run_classify(o);
    else if (derive->parsed()) rep = run_derive(o);
    else if (cex->parsed()) rep = run_counterexample(o);
    else rep = run_list_checks();
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UnknownPreset& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (o.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.passed() ? 0 : 1;
}
