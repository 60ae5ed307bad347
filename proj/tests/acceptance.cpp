// End-to-end acceptance suite: one line per criterion, nonzero exit on any
// failure.  Each block is self-contained so a failure pinpoints the area.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qv/dsl.hpp"
#include "qv/presets.hpp"
#include "qv/report.hpp"
#include "qv/so3.hpp"

using namespace qv;

namespace {

int g_fail = 0;

void criterion(int n, bool ok, const std::string& detail) {
  std::printf("criterion %02d: %s  %s\n", n, ok ? "pass" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_fail;
}

std::string fmt(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", v);
  return b;
}

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

Mat random_unitary(int n, Rng& rng) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.cgauss();
  // Gram-Schmidt on columns
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      cxd ip = 0;
      for (int i = 0; i < n; ++i) ip += std::conj(m.at(i, k)) * m.at(i, j);
      for (int i = 0; i < n; ++i) m.at(i, j) -= ip * m.at(i, k);
    }
    double nn = 0;
    for (int i = 0; i < n; ++i) nn += std::norm(m.at(i, j));
    nn = std::sqrt(nn);
    for (int i = 0; i < n; ++i) m.at(i, j) /= nn;
  }
  return m;
}

double spoint_dist(const SPoint& a, const SPoint& b) {
  return std::max({std::abs(a.s - b.s), std::abs(a.t - b.t), std::abs(a.r - b.r)});
}

cxd det3(const Mat& m) {
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

// ---------------------------------------------------------------------------

void c1_preset_fidelity() {
  struct {
    const char* name;
    int count;
  } want[] = {{"qmap-m2", 7},
              {"qmap-powers", 10},
              {"qmap-trace", 9},
              {"qmap-omega0", 5},
              {"sqo3", 20}};
  bool ok = true;
  std::string d;
  for (const auto& w : want) {
    const Presentation& p = builtin_presentation(w.name);
    if (static_cast<int>(p.relations.size()) != w.count) ok = false;
    for (const Poly& r : p.relations)
      if (!apply_counit(r, p).is_zero()) ok = false;
    d += std::string(w.name) + "=" + std::to_string(p.relations.size()) + " ";
  }
  criterion(1, ok, "relation counts and exact counit kills: " + d);
}

void c2_state_constraint_derivation() {
  auto t0 = std::chrono::steady_clock::now();
  StateConstraintDerivation der = derive_state_constraints();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = der.report.all_passed() && secs < 1.0;
  for (const auto& e : der.report.entries)
    if (e.status != CheckStatus::PassSymbolic) ok = false;
  criterion(2, ok, "symbolic derivation, " + std::to_string(der.report.entries.size()) +
                       " exact comparisons in " + fmt(secs) + "s");
}

void c3_truncation_oracle() {
  bool ok = true;
  double worst64 = 0;
  for (double q : {0.3, 0.5, 0.8}) {
    Rep r64 = rep_sqo3(q, 64, 2);
    Rep r128 = rep_sqo3(q, 128, 2);
    for (size_t i = 0; i < r64.pres->relations.size(); ++i) {
      double a = r64.interior_residual(r64.pres->relations[i]);
      double b = r128.interior_residual(r128.pres->relations[i]);
      worst64 = std::max(worst64, a);
      if (!(a < 1e-9) || !(b <= a || b < 1e-12)) ok = false;
    }
  }
  criterion(3, ok, "20 relations at q in {0.3,0.5,0.8}, dims 64/128; worst " +
                       fmt(worst64));
}

void c4_proof_replay() {
  CheckReport rep = proof_replay(0.5, 64, 1e-9);
  bool ok = rep.all_passed();
  double worst = 0;
  for (const auto& e : rep.entries) worst = std::max(worst, e.residual);
  const CheckEntry* ap = rep.find("matrix/aprop-vs-nowa");
  if (!ap || !(ap->residual < 1e-10)) ok = false;
  for (const char* nm : {"matrix/a-star-a", "matrix/a-a-star",
                         "antipode/right-inverse", "antipode/left-inverse"}) {
    const CheckEntry* e = rep.find(nm);
    if (!e || !(e->residual < 1e-9)) ok = false;
  }
  criterion(4, ok, std::to_string(rep.entries.size()) +
                       " named identities at q=0.5 dim=64; worst " + fmt(worst));
}

bool coalgebra_entries_ok(const CheckReport& rep, bool symbolic_only) {
  for (const auto& e : rep.entries) {
    if (e.failed()) return false;
    bool sym = e.status == CheckStatus::PassSymbolic;
    if (symbolic_only && !sym) return false;
    if (e.status == CheckStatus::Inconclusive) return false;
    if (!sym) {
      double lim = e.name.find("coassoc") != std::string::npos  ? 1e-8
                   : e.name.find("counit") != std::string::npos ? 1e-10
                                                                : 1e-9;
      if (!(e.residual < lim)) return false;
    }
  }
  return true;
}

void c5_coalgebra_axioms() {
  bool ok = true;
  int n = 0;
  for (const char* nm : {"qmap-omega0", "circle"}) {
    CheckReport r = check_comultiplication(builtin_presentation(nm), nullptr, 1e-9);
    ok = ok && coalgebra_entries_ok(r, true);
    n += static_cast<int>(r.entries.size());
  }
  struct {
    const char* nm;
    Rep rep;
  } cases[] = {{"qmap-m2", rep_qmapm2(0.5, 32)},
               {"qmap-powers", rep_powers(0.5, 32)},
               {"qmap-trace", pushforward(map_trace_to_so3(), rep_so3_samples(32, 1))},
               {"sqo3", rep_sqo3(0.5, 32)},
               {"so3-classical", rep_so3_samples(32, 1)}};
  for (auto& c : cases) {
    CheckReport r =
        check_comultiplication(builtin_presentation(c.nm), &c.rep, 1e-9);
    ok = ok && coalgebra_entries_ok(r, false);
    n += static_cast<int>(r.entries.size());
  }
  criterion(5, ok, std::to_string(n) + " coalgebra checks over 7 presentations");
}

void c6_coaction_and_states() {
  bool ok = true;
  auto run = [&](const char* nm, const Rep* rep, const StateSpec* st) {
    const Presentation& p = builtin_presentation(nm);
    CheckReport r = check_coaction(p, rep, 1e-9);
    if (st) r.merge(check_state_preservation(p, *st, rep, 1e-9));
    for (const auto& e : r.entries)
      if (e.failed() || e.status == CheckStatus::Inconclusive ||
          (e.status == CheckStatus::PassNumeric && !(e.residual < 1e-9)))
        ok = false;
  };
  Rep powers = rep_powers(0.5, 32);
  StateSpec wq = StateSpec::powers();
  run("qmap-powers", &powers, &wq);
  Rep trace = pushforward(map_trace_to_so3(), rep_so3_samples(32, 1));
  StateSpec tr = StateSpec::trace();
  run("qmap-trace", &trace, &tr);
  StateSpec w0 = StateSpec::omega0();
  run("qmap-omega0", nullptr, &w0);

  // Lambda_q as a morphism into Podles quantum SO(3)
  Rep target = rep_sqo3(0.5, 32);
  RuleSet rules = rules_for(builtin_presentation("sqo3"));
  CheckReport hom = check_hom(map_lambda_q(), &target, &rules, 1e-9);
  hom.merge(check_intertwining(map_lambda_q(), &target, &rules, 1e-9));
  for (const auto& e : hom.entries)
    if (e.failed() || e.status == CheckStatus::Inconclusive) ok = false;
  criterion(6, ok, "coaction squares, state preservation, morphism checks");
}

void c7_commutation_counterexamples() {
  CkExample e = ck_counterexample(40);
  double qc = std::abs(std::pow(e.q, 4) + e.q * e.q - 1.0);
  std::vector<bool> keep(static_cast<size_t>(e.dim), true);
  keep[static_cast<size_t>(e.dim) - 1] = keep[static_cast<size_t>(e.dim) - 2] = false;
  double q2 = e.q * e.q, q4 = q2 * q2;
  Mat K2 = e.K * e.K;
  double hyp = 0;
  hyp = std::max(hyp, op_norm_cols(e.A.adjoint() * e.A - (e.K - K2), keep));
  hyp = std::max(hyp, op_norm_cols(e.C.adjoint() * e.C - (e.K - K2), keep));
  hyp = std::max(hyp, op_norm_cols(e.A * e.A.adjoint() - (q2 * e.K - q4 * K2), keep));
  hyp = std::max(hyp, op_norm_cols(e.C * e.C.adjoint() - (q2 * e.K - q4 * K2), keep));
  hyp = std::max(hyp, op_norm_cols(e.A * e.K - q2 * (e.K * e.A), keep));
  double gap = op_norm(e.C * e.K - q2 * (e.K * e.C));
  bool ok = qc < 1e-13 && hyp < 1e-12 && gap > 0.05;

  FlipExample f = flip_counterexample(128);
  double exact = std::max((f.A * f.K - f.K * f.A).max_abs(),
                          (f.A * f.C - f.C * f.A).max_abs());
  double fgap = op_norm(f.C * f.K - f.K * f.C);
  ok = ok && exact == 0.0 && fgap > 0.1;
  criterion(7, ok, "hyp " + fmt(hyp) + ", gap " + fmt(gap) + "; flip exact, gap " +
                       fmt(fgap));
}

void c8_commutant_transfer_suite() {
  bool ok = true;
  double worst = 0;
  for (int s = 0; s < 100; ++s) {
    Rng rng(1000u + static_cast<uint64_t>(s));
    int n = 6;
    double lam = 0.3 + 0.5 * rng.uniform();
    Mat D(n, n), S(n, n);
    double d0 = 0.5 + rng.uniform();
    for (int k = 0; k < n; ++k) D.at(k, k) = d0 * std::pow(lam, k);
    for (int k = 0; k + 1 < n; ++k) S.at(k, k + 1) = rng.cgauss();
    Mat U = random_unitary(n, rng);
    Mat N = U * D * U.adjoint();
    Mat A = U * S * U.adjoint();
    CheckEntry e = fuglede_putnam_check(A, N, lam, 1e-10);
    worst = std::max(worst, e.residual);
    if (e.failed() || !(e.residual < 1e-10)) ok = false;
  }
  criterion(8, ok, "100 seeded instances; worst conclusion residual " + fmt(worst));
}

void c9_group_suite() {
  Rng rng(42);
  SPoint u = s_unit();
  double wa = 0, wu = 0, wi = 0, wc = 0, wh = 0, wd = 0;
  for (int k = 0; k < 1000; ++k) {
    SPoint p1 = haar_spoint(rng), p2 = haar_spoint(rng), p3 = haar_spoint(rng);
    wa = std::max(wa, spoint_dist(s_mul(s_mul(p1, p2), p3), s_mul(p1, s_mul(p2, p3))));
    wu = std::max(wu, spoint_dist(s_mul(p1, u), p1));
    wi = std::max(wi, spoint_dist(s_mul(p1, s_inv(p1)), u));
    wc = std::max(wc, s_constraint(s_mul(p1, p2)));
    wh = std::max(wh, (s_to_so3(s_mul(p1, p2)) - s_to_so3(p1) * s_to_so3(p2)).max_abs());
    wd = std::max(wd, std::abs(det3(s_to_so3(p1)) - cxd(1.0)));
  }
  bool ok = wa < 1e-11 && wu < 1e-12 && wi < 1e-12 && wc < 1e-12 && wh < 1e-10 &&
            wd < 1e-10;
  criterion(9, ok, "assoc " + fmt(wa) + ", unit " + fmt(wu) + ", inv " + fmt(wi) +
                       ", closure " + fmt(wc) + ", hom " + fmt(wh) + ", det " + fmt(wd));
}

void c10_classification() {
  bool ok = true;
  Rng rng(7);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    Mat m(2, 2);
    for (int i = 0; i < 4; ++i) m.a[static_cast<size_t>(i)] = rng.cgauss();
    Mat rho = m * m.adjoint();
    cxd tr = rho.at(0, 0) + rho.at(1, 1);
    rho = (1.0 / tr) * rho;
    Classification c = classify_state(rho);
    double err = op_norm(c.u * rho_q(c.q) * c.u.adjoint() - rho);
    worst = std::max(worst, err);
    if (!(err < 1e-12)) ok = false;
  }

  // classical rotation action: q = 1 with Monte-Carlo convergence in n
  // (the invariance residual is noise-dominated, so the slope check averages
  // a few seeds at each sample count)
  ActionSpec so3;
  so3.preset = "so3-classical";
  PipelineResult p3 = classify_action_pipeline(so3, 1e-9, 5, 1000);
  PipelineResult p4 = classify_action_pipeline(so3, 1e-9, 5, 10000);
  double a3 = 0, a4 = 0;
  for (uint64_t s = 11; s <= 15; ++s) {
    double r3 = 0, r4 = 0;
    invariant_state(so3, rho_q(0.7), 1000, s, &r3);
    invariant_state(so3, rho_q(0.7), 10000, s, &r4);
    a3 += r3;
    a4 += r4;
  }
  if (!(p3.q == 1.0 && p4.q == 1.0 && p3.report.all_passed() &&
        p4.report.all_passed() && a4 < a3))
    ok = false;

  // rotation action on the circle, conjugated: q = 0 and the recovered unitary
  // diagonalizes the fixed algebra v* D v (either extreme state is canonical)
  Mat rho0 = rho_q(0.0);
  Mat rho1 = Mat::identity(2) - rho0;
  Rng vr(99);
  for (int k = 0; k < 3; ++k) {
    Mat v = k == 0 ? Mat::identity(2) : random_unitary(2, vr);
    ActionSpec a;
    a.preset = "circle";
    PipelineResult pr = classify_action_pipeline(conjugate_action(a, v), 1e-9, 7, 0);
    Mat got = pr.u * rho0 * pr.u.adjoint();
    double uerr = std::min(op_norm(got - v.adjoint() * rho0 * v),
                           op_norm(got - v.adjoint() * rho1 * v));
    if (k == 0) uerr = std::max(uerr, (pr.u - Mat::identity(2)).max_abs());
    if (!(pr.q == 0.0 && pr.report.all_passed() && uerr < 1e-9)) ok = false;
  }
  criterion(10, ok, "200 state round-trips (worst " + fmt(worst) +
                        "); action pipelines recover q=1 and q=0");
}

void c11_fixed_points() {
  bool ok = true;
  std::string d;
  for (double q : {0.3, 0.5, 0.8}) {
    int fp = fixed_point_dimension(rep_sqo3(q, 32));
    d += "q" + fmt(q) + ":" + std::to_string(fp) + " ";
    if (fp != 1) ok = false;
  }
  int fp0 = fixed_point_dimension(rep_circle_samples(12));
  int fp1 = fixed_point_dimension(pushforward(map_trace_to_so3(), rep_so3_samples(64, 3)));
  d += "circle:" + std::to_string(fp0) + " so3-64:" + std::to_string(fp1);
  if (fp0 != 2 || fp1 != 1) ok = false;
  criterion(11, ok, "fixed-point dimensions " + d);
}

void c12_q0_model() {
  int h = 10;
  Rep r = rep_q0(h);
  const Presentation& pres = *r.pres;
  bool ok = true;
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    Mat m = r.eval(pres.relations[i]);
    double nrm = op_norm(m);
    if (pres.relation_names[i] == "z1") {
      int defect_cols = 0;
      for (int j = 0; j < r.dim; ++j) {
        double cn = 0;
        for (int i2 = 0; i2 < r.dim; ++i2) cn += std::norm(m.at(i2, j));
        if (cn > 1e-24) ++defect_cols;
      }
      if (!(std::abs(nrm - 1.0) < 1e-12 && defect_cols == 2 * h)) ok = false;
    } else if (!(nrm < 1e-14)) {
      ok = false;
    }
  }
  const Mat& beta = r.mats[static_cast<size_t>(pres.gen_index("beta"))];
  double bb = op_norm(beta.adjoint() * beta - Mat::identity(r.dim));
  if (!(bb >= 1.0 - 1e-12)) ok = false;
  CheckReport cm = check_comultiplication(pres, nullptr, 1e-9);
  for (const auto& e : cm.entries)
    if (e.status != CheckStatus::PassSymbolic) ok = false;
  criterion(12, ok, "defect on " + std::to_string(2 * h) +
                        " columns, ||b*b - 1|| = " + fmt(bb) + ", symbolic coalgebra");
}

void c13_determinism() {
  auto make = [] {
    Report rep;
    rep.plan = {{"command", "classify"}, {"action", "circle"}, {"state-seed", 7}};
    ActionSpec a;
    a.preset = "circle";
    PipelineResult pr = classify_action_pipeline(a, 1e-9, 7, 0);
    rep.checks = pr.report;
    rep.result = {{"q", pr.q}, {"target", pr.target}, {"ergodic", pr.ergodic}};
    return rep.to_json().dump(2);
  };
  auto make2 = [] {
    Report rep;
    rep.plan = {{"command", "verify"}, {"preset", "qmap-powers"}, {"seed", 3}};
    Rep r = rep_powers(0.5, 16);
    rep.checks = check_comultiplication(*r.pres, &r, 1e-9, 3);
    return rep.to_json().dump(2);
  };
  bool ok = make() == make() && make2() == make2();
  criterion(13, ok, "byte-identical JSON for repeated (plan, seed) runs");
}

}  // namespace

int main() {
  c1_preset_fidelity();
  c2_state_constraint_derivation();
  c3_truncation_oracle();
  c4_proof_replay();
  c5_coalgebra_axioms();
  c6_coaction_and_states();
  c7_commutation_counterexamples();
  c8_commutant_transfer_suite();
  c9_group_suite();
  c10_classification();
  c11_fixed_points();
  c12_q0_model();
  c13_determinism();
  std::printf("%s (%d criteria%s)\n", g_fail ? "FAILED" : "ALL PASS", 13,
              g_fail ? (", " + std::to_string(g_fail) + " failing").c_str() : "");
  return g_fail ? 1 : 0;
}
