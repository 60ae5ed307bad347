#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qv/dsl.hpp"
#include "qv/presets.hpp"
#include "qv/report.hpp"
#include "qv/so3.hpp"

using namespace qv;

TEST_CASE("q-rational scalars") {
  QScalar q2 = QScalar::qpow(2);
  QScalar qm2 = QScalar::qpow(-2);
  CHECK(q2 * qm2 == QScalar(1));
  CHECK((q2 + QScalar(1)) * (q2 - QScalar(1)) == q2 * q2 - QScalar(1));
  QScalar half = QScalar::ratio(1, 2);
  CHECK(half + half == QScalar(1));
  CHECK(q2.eval(0.5) == doctest::Approx(0.25));
  CHECK(QScalar::qpow(-1).eval(0.5) == doctest::Approx(2.0));

  // 1/(1-q) specializes everywhere except q = 1
  QScalar pole(ZPoly::one(), ZPoly::one() - ZPoly::q_to(1));
  CHECK(pole.eval(0.5) == doctest::Approx(2.0));
  CHECK_THROWS_AS(pole.eval(1.0), PoleAtQ);

  // exact q := 1 specialization goes through the rational function
  QScalar r(ZPoly::one() - ZPoly::q_to(2), ZPoly::one() - ZPoly::q_to(1));
  CHECK(r.at_one() == QScalar(2));  // (1-q^2)/(1-q) = 1+q
}

TEST_CASE("word order and polynomial algebra") {
  // earlier-listed generator is the larger letter; g < g*
  Letter a{0, 0, 0}, as{0, 1, 0}, b{1, 0, 0};
  CHECK(letter_cmp(a, b) > 0);  // gen 0 > gen 1
  CHECK(letter_cmp(a, as) < 0);
  CHECK(letter_cmp(b, a) < 0);

  Poly x = Poly::gen(0), y = Poly::gen(1);
  CHECK((x * y).leading().first == (Word::letter(0) * Word::letter(1)));
  CHECK(((x + y) * (x - y)) == (x * x - x * y + y * x - y * y));
  CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
  CHECK((x * y).adjoint().adjoint() == x * y);

  // letters on distinct legs commute in canonical form
  Poly x0 = Poly::gen(0, false, 0), y1 = Poly::gen(1, false, 1);
  CHECK(x0 * y1 == y1 * x0);

  // deg-lex: any degree-2 word beats any degree-1 word
  CHECK(word_cmp(Word::letter(0), Word::letter(1) * Word::letter(1)) < 0);
}

TEST_CASE("rewriting: orientation, reduction, completion") {
  const Presentation& circ = builtin_presentation("circle");
  RuleSet rules = orient_rules(circ);
  Poly uu = Poly::gen(0) * Poly::gen(0, true);
  auto out = reduce(uu - Poly::one(), rules);
  CHECK(out.status == ReductionStatus::ReducedToZero);

  // u u* u u* u u* reduces all the way to 1
  Poly p = uu * uu * uu - Poly::one();
  CHECK(reduce(p, rules).status == ReductionStatus::ReducedToZero);

  // reduction is idempotent on normal forms
  const Presentation& pw = builtin_presentation("qmap-powers");
  RuleSet rw = rules_for(pw);
  Poly nf = reduce(Poly::gen(0) * Poly::gen(2) * Poly::gen(1), rw).normal_form;
  CHECK(reduce(nf, rw).normal_form == nf);

  // the q=0 quotient needs one completion round for its two-leg identities
  const Presentation& om = builtin_presentation("qmap-omega0");
  RuleSet ro = rules_for(om);
  for (const Poly& rel : om.relations) {
    Poly d = delta_extend(rel, om);
    CHECK(reduce(d, ro).status == ReductionStatus::ReducedToZero);
  }
}

TEST_CASE("spec DSL round-trips and reports error positions") {
  for (const std::string& nm : builtin_preset_names()) {
    const Presentation& p = builtin_presentation(nm);
    ParsedSpec back = parse_algebra_spec(print_presentation(p));
    REQUIRE(back.pres.gens.size() == p.gens.size());
    REQUIRE(back.pres.relations.size() == p.relations.size());
    for (size_t i = 0; i < p.relations.size(); ++i)
      CHECK(back.pres.relations[i] == p.relations[i]);
    CHECK(back.pres.comult == p.comult);
    CHECK(back.pres.coaction == p.coaction);
  }

  const Presentation& pw = builtin_presentation("qmap-powers");
  CHECK_THROWS_AS(parse_expression("beta + zeta", pw), ParseError);
  try {
    parse_algebra_spec("GENERATORS: a\n\nRELATIONS:\nr1: a b - 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.col > 0);
  }
  CHECK_THROWS_AS(builtin_presentation("nope"), UnknownPreset);
}

TEST_CASE("preset fidelity beyond the acceptance set") {
  CHECK(builtin_presentation("m2").relations.size() == 2);
  CHECK(builtin_presentation("circle").relations.size() == 2);
  CHECK(builtin_presentation("so3-classical").relations.size() == 10);
  CHECK(builtin_presentation("sqo3-verbatim").relations.size() == 20);
  CHECK(builtin_preset_names().size() == 9);
  // transcribing a builtin through the DSL file path gives the same algebra
  const Presentation& om = builtin_presentation("qmap-omega0");
  ParsedSpec again = parse_algebra_spec(print_presentation(om));
  CHECK(again.pres.relations == om.relations);
}

TEST_CASE("dense kernel: eigensolver, norms, rng") {
  Mat h(2, 2);
  h.at(0, 0) = 2;
  h.at(0, 1) = 1;
  h.at(1, 0) = 1;
  h.at(1, 1) = 2;
  auto eig = hermitian_eig(h);
  CHECK(eig.values[0] == doctest::Approx(1.0));
  CHECK(eig.values[1] == doctest::Approx(3.0));
  // eigenvectors diagonalize
  Mat d = eig.vectors.adjoint() * h * eig.vectors;
  CHECK(std::abs(d.at(0, 1)) < 1e-12);

  Mat c(2, 2);  // complex Hermitian with eigenvalues 0 and 2
  c.at(0, 0) = 1;
  c.at(0, 1) = cxd(0, -1);
  c.at(1, 0) = cxd(0, 1);
  c.at(1, 1) = 1;
  auto e2 = hermitian_eig(c);
  CHECK(e2.values[0] == doctest::Approx(0.0));
  CHECK(e2.values[1] == doctest::Approx(2.0));

  CHECK(op_norm(h) == doctest::Approx(3.0));
  std::vector<bool> keep = {true, true};
  CHECK(op_norm_power(h, keep) == doctest::Approx(3.0));
  keep = {true, false};
  CHECK(op_norm_cols(h, keep) == doctest::Approx(op_norm_power(h, keep)));

  Mat x(2, 3), y(2, 2);
  CHECK(kron(x, y).rows == 4);
  CHECK(kron(x, y).cols == 6);

  Rng r1(5), r2(5);
  for (int i = 0; i < 16; ++i) CHECK(r1.next_u64() == r2.next_u64());
  Rng g(1);
  double mean = 0;
  for (int i = 0; i < 4096; ++i) mean += g.gauss();
  CHECK(std::abs(mean / 4096) < 0.05);
}

TEST_CASE("truncated representation goldens") {
  Rep r = rep_sqo3(0.5, 16);
  const Presentation& p = *r.pres;
  const Mat& A = r.mats[static_cast<size_t>(p.gen_index("A"))];
  const Mat& L = r.mats[static_cast<size_t>(p.gen_index("L"))];
  CHECK(A.at(1, 2).real() == doctest::Approx(0.2420614591).epsilon(1e-9));
  CHECK(L.at(0, 2).real() == doctest::Approx(0.8385254916).epsilon(1e-9));
  double worst = 0;
  for (const Poly& rel : p.relations)
    worst = std::max(worst, r.interior_residual(rel));
  CHECK(worst < 1e-14);
  validate_rep(r, 1e-12);

  // pushforwards satisfy their own presentations
  validate_rep(rep_powers(0.5, 16), 1e-12);
  validate_rep(rep_qmapm2(0.5, 16), 1e-12);

  CkExample ck = ck_counterexample(40);
  double gap = op_norm(ck.C * ck.K - (ck.q * ck.q) * (ck.K * ck.C));
  CHECK(gap == doctest::Approx(0.1146979421).epsilon(1e-6));  // = q^9

  FlipExample f = flip_counterexample(128);
  CHECK(op_norm(f.C * f.K - f.K * f.C) == doctest::Approx(0.2499848).epsilon(1e-4));
}

TEST_CASE("two-leg and three-leg evaluation agree with dense Kronecker") {
  Rep r = rep_sqo3(0.5, 4);
  const Presentation& p = *r.pres;
  Poly d = (*p.comult)[static_cast<size_t>(p.gen_index("K"))];

  // eval2 vs explicit per-term kron
  Mat naive(16, 16);
  for (const auto& [w, c] : d.terms())
    naive = naive + c.eval(r.q) * kron(r.eval_leg(w, 0), r.eval_leg(w, 1));
  CHECK((r.eval2(d) - naive).max_abs() < 1e-14);

  // apply3 vs dense triple kron
  Poly t = delta_on_leg(d, p, 0);
  Mat dense(64, 64);
  for (const auto& [w, c] : t.terms())
    dense = dense + c.eval(r.q) *
                        kron(kron(r.eval_leg(w, 0), r.eval_leg(w, 1)), r.eval_leg(w, 2));
  Rng rng(3);
  std::vector<cxd> v(64);
  for (auto& x : v) x = rng.cgauss();
  std::vector<cxd> got = r.apply3(t, v);
  double err = 0;
  for (int i = 0; i < 64; ++i) {
    cxd acc = 0;
    for (int j = 0; j < 64; ++j) acc += dense.at(i, j) * v[static_cast<size_t>(j)];
    err = std::max(err, std::abs(acc - got[static_cast<size_t>(i)]));
  }
  CHECK(err < 1e-13);
}

TEST_CASE("verification layer catches injected faults") {
  Rep r = rep_sqo3(0.5, 16);
  const Presentation& p = *r.pres;
  int gi = p.gen_index("G");
  Mat& G = r.mats[static_cast<size_t>(gi)];
  for (int i = 0; i < r.dim; ++i) G.at(i, i) += 0.1;
  CheckReport rep = check_relations(r, 1e-9);
  CHECK(!rep.all_passed());
  const CheckEntry* p04 = rep.find("sqo3/relation/p04");
  REQUIRE(p04 != nullptr);
  CHECK(p04->failed());

  Rep r2 = rep_sqo3(0.5, 16);
  int ai = r2.pres->gen_index("A");
  r2.mats[static_cast<size_t>(ai)] = 1.01 * r2.mats[static_cast<size_t>(ai)];
  CheckReport rep2 = check_relations(r2, 1e-9);
  const CheckEntry* p05 = rep2.find("sqo3/relation/p05");
  REQUIRE(p05 != nullptr);
  CHECK(p05->failed());
  CHECK_THROWS_AS(validate_rep(r2, 1e-9), RelationResidualTooLarge);
}

TEST_CASE("spectral classification and commutant transfer guards") {
  Rep r = rep_sqo3(0.5, 16);
  const Mat& K = r.mats[static_cast<size_t>(r.pres->gen_index("K"))];
  SpectralReport sr = spectral_structure_check(K, 0.5, 1e-9);
  CHECK(sr.gap_clear);
  CHECK(sr.eigenvalues.front() == doctest::Approx(1.0));
  CHECK(sr.classified.front() == 0);
  CHECK(sr.worst_classification_error < 1e-12);

  Mat bad = K;
  bad.at(0, 1) = 0.3;
  CHECK_THROWS_AS(spectral_structure_check(bad, 0.5, 1e-9), NotSelfAdjoint);
  Mat big = Mat::identity(3);
  big.at(0, 0) = 2.0;
  CHECK_THROWS_AS(spectral_structure_check(big, 0.5, 1e-9), SpectrumOutOfRange);

  // premise violation must be loud, not a silent pass
  Mat n(2, 2);
  n.at(0, 1) = 1.0;  // nilpotent, not normal
  CHECK_THROWS_AS(fuglede_putnam_check(Mat::identity(2), n, 1.0, 1e-10),
                  HypothesisViolated);
}

TEST_CASE("continuity span and redundancy evidence") {
  std::vector<std::vector<cxd>> pts;
  for (int k = 0; k < 12; ++k) {
    double th = 2.0 * 3.141592653589793238462643383279502884 * k / 12;
    pts.push_back({cxd(std::cos(th), std::sin(th))});
  }
  Rep circ = rep_diag_points(builtin_presentation("circle"), pts);
  CHECK(check_podles_density(circ).all_passed());

  CheckReport red = sqo3_redundancy_report();
  CHECK(red.entries.size() == 4);
  for (const auto& e : red.entries) CHECK(e.status == CheckStatus::PassSymbolic);
}

TEST_CASE("rotation group module") {
  Rng rng(11);
  SPoint p1 = haar_spoint(rng), p2 = haar_spoint(rng);
  CHECK(s_constraint(p1) < 1e-14);
  CHECK(s_constraint(s_mul(p1, p2)) < 1e-13);

  // same seed, same sample
  Rng rng2(11);
  SPoint q1 = haar_spoint(rng2);
  CHECK(std::abs(p1.s - q1.s) == 0.0);

  // the product formula is cubic in the scale, so a blown-up point drifts
  // far faster than its own constraint residual and trips the guard
  SPoint badp{10.0 * p1.s, 10.0 * p1.t, 10.0 * p1.r};
  CHECK_THROWS_AS(s_mul(badp, badp), InvariantDrift);

  Classification c = classify_state(rho_q(0.4));
  CHECK(c.q == doctest::Approx(0.4));
  CHECK(op_norm(c.u * rho_q(c.q) * c.u.adjoint() - rho_q(0.4)) < 1e-13);

  Mat notu(2, 2);
  notu.at(0, 0) = 2.0;
  ActionSpec a;
  CHECK_THROWS_AS(conjugate_action(a, notu), NotUnitary);
}

TEST_CASE("state specs and the derivation endpoint") {
  StateSpec pw = StateSpec::powers();
  CHECK(pw.w[0].at_one() == QScalar::ratio(1, 2));
  CHECK(pw.w[3].at_one() == QScalar::ratio(1, 2));
  CHECK(pw.w[0].eval(0.5) == doctest::Approx(0.8));
  StateSpec tr = StateSpec::trace();
  CHECK(tr.w[0] == QScalar::ratio(1, 2));

  StateConstraintDerivation der = derive_state_constraints();
  CHECK(der.report.all_passed());
  CHECK(der.constraints.size() == 4);
  CHECK(!der.alpha_constraint.is_zero());
}

TEST_CASE("report serialization") {
  Report rep;
  rep.plan = {{"command", "verify"}, {"preset", "circle"}};
  CheckEntry e;
  e.name = "demo";
  e.status = CheckStatus::PassNumeric;
  e.residual = 1e-12;
  rep.checks.add(e);
  rep.wall_seconds = 1.25;
  ordered_json j = rep.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["overall"] == "pass");
  CHECK(j["checks"].size() == 1);
  CHECK(!j.contains("wall_seconds"));  // timing must not break byte-determinism
  CHECK(rep.to_text().find("1.25s") != std::string::npos);
}
