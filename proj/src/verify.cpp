#include "qv/verify.hpp"

#include <cmath>
#include <sstream>

#include "qv/dsl.hpp"
#include "qv/presets.hpp"

namespace qv {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::PassSymbolic: return "PassSymbolic";
    case CheckStatus::PassNumeric: return "PassNumeric";
    case CheckStatus::Inconclusive: return "Inconclusive";
    case CheckStatus::Fail: return "Fail";
  }
  return "?";
}

RuleSet rules_for(const Presentation& pres, int completion_rounds, int max_degree) {
  RuleSet rs = orient_rules(pres);
  for (int i = 0; i < completion_rounds; ++i)
    if (complete_once(rs, max_degree) == 0) break;
  return rs;
}

StateSpec StateSpec::powers() {
  ZPoly one = ZPoly::one();
  ZPoly q2 = ZPoly::q_to(2);
  ZPoly den = one + q2;
  return {{QScalar(one, den), QScalar(0), QScalar(0), QScalar(q2, den)}};
}

StateSpec StateSpec::trace() {
  return {{QScalar::ratio(1, 2), QScalar(0), QScalar(0), QScalar::ratio(1, 2)}};
}

StateSpec StateSpec::omega0() {
  return {{QScalar(1), QScalar(0), QScalar(0), QScalar(0)}};
}

PolyMat2 pm_mul(const PolyMat2& x, const PolyMat2& y) {
  PolyMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[static_cast<size_t>(2 * i + j)] =
          x[static_cast<size_t>(2 * i)] * y[static_cast<size_t>(j)] +
          x[static_cast<size_t>(2 * i + 1)] * y[static_cast<size_t>(2 + j)];
  return r;
}

PolyMat2 pm_adjoint(const PolyMat2& x) {
  return {x[0].adjoint(), x[2].adjoint(), x[1].adjoint(), x[3].adjoint()};
}

PolyMat2 pm_sub(const PolyMat2& x, const PolyMat2& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

std::array<PolyMat2, 4> coaction_basis_images(const Presentation& pres) {
  const CoactionMatrix& phi = *pres.coaction;
  PolyMat2 P = {phi[0], phi[1], phi[2], phi[3]};
  PolyMat2 Ps = pm_adjoint(P);
  return {pm_mul(P, Ps), P, Ps, pm_mul(Ps, P)};
}

namespace {

// Try symbolic reduction; fall back to a numeric interior residual when a
// representation is available.  `legs` selects the evaluation arity.
CheckEntry verdict(std::string name, const Poly& diff, const RuleSet* rules,
                   const Rep* rep, int legs, double tol, std::string context) {
  CheckEntry e;
  e.name = std::move(name);
  e.context = std::move(context);
  if (diff.is_zero()) {
    e.status = CheckStatus::PassSymbolic;
    return e;
  }
  if (rules) {
    auto rr = reduce(diff, *rules);
    if (rr.status == ReductionStatus::ReducedToZero) {
      e.status = CheckStatus::PassSymbolic;
      return e;
    }
  }
  if (rep) {
    double res = legs == 1 ? rep->interior_residual(diff) : rep->interior_residual2(diff);
    e.residual = res;
    e.status = res < tol ? CheckStatus::PassNumeric : CheckStatus::Fail;
    return e;
  }
  e.status = CheckStatus::Inconclusive;
  return e;
}

std::string rel_name(const Presentation& pres, size_t i) {
  return i < pres.relation_names.size() ? pres.relation_names[i] : std::to_string(i);
}

bool poly_matches_up_to_scalar(const Poly& p, const Poly& r) {
  if (p == r) return true;
  if (p.is_zero() || r.is_zero()) return false;
  if (p.term_count() != r.term_count()) return false;
  const auto& [pw, pc] = p.leading();
  const auto& [rw, rc] = r.leading();
  if (!(pw == rw)) return false;
  Coeff ratio = pc * rc.inv();
  return p == r.scaled(ratio);
}

}  // namespace

CheckReport check_relations(const Rep& rep, double tol) {
  CheckReport out;
  const Presentation& pres = *rep.pres;
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    CheckEntry e;
    e.name = pres.name + "/relation/" + rel_name(pres, i);
    e.context = print_poly(pres.relations[i], pres);
    e.residual = rep.interior_residual(pres.relations[i]);
    e.status = e.residual < tol ? CheckStatus::PassNumeric : CheckStatus::Fail;
    out.add(std::move(e));
  }
  return out;
}

CheckReport check_hom(const GensMap& f, const Rep* rep, const RuleSet* rules,
                      double tol) {
  CheckReport out;
  const Presentation& src = *f.source;
  for (size_t i = 0; i < src.relations.size(); ++i) {
    Poly img = substitute_hom(src.relations[i], f);
    out.add(verdict("hom/" + src.name + "->" + f.target->name + "/" + rel_name(src, i),
                    img, rules, rep, 1, tol, print_poly(src.relations[i], src)));
  }
  return out;
}

CheckReport check_comultiplication(const Presentation& pres, const Rep* rep,
                                   double tol, uint64_t seed) {
  CheckReport out;
  RuleSet rules = rules_for(pres);

  // (i) well-definedness on relations
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    Poly d = delta_extend(pres.relations[i], pres);
    out.add(verdict(pres.name + "/comult-well-defined/" + rel_name(pres, i), d,
                    &rules, rep, 2, tol, print_poly(pres.relations[i], pres)));
  }

  // (ii) coassociativity on generators, three legs
  for (int g = 0; g < pres.num_gens(); ++g) {
    const Poly& dg = (*pres.comult)[static_cast<size_t>(g)];
    Poly diff = delta_on_leg(dg, pres, 0) - delta_on_leg(dg, pres, 1);
    CheckEntry e;
    e.name = pres.name + "/coassoc/" + pres.gens[static_cast<size_t>(g)].name;
    e.context = "(Delta (x) id)Delta - (id (x) Delta)Delta";
    if (diff.is_zero()) {
      e.status = CheckStatus::PassSymbolic;
    } else {
      auto rr = reduce(diff, rules);
      if (rr.status == ReductionStatus::ReducedToZero) {
        e.status = CheckStatus::PassSymbolic;
      } else if (rep) {
        // seeded matrix-free probes on interior-supported unit vectors
        Rng rng(seed * 1000003u + static_cast<uint64_t>(g));
        size_t d3 = static_cast<size_t>(rep->dim) * rep->dim * rep->dim;
        auto mask = rep->interior_mask(3);
        double worst = 0.0;
        for (int probe = 0; probe < 32; ++probe) {
          std::vector<cxd> v(d3);
          double nrm = 0.0;
          for (size_t k = 0; k < d3; ++k) {
            v[k] = mask[k] ? rng.cgauss() : cxd(0);
            nrm += std::norm(v[k]);
          }
          nrm = std::sqrt(nrm);
          for (auto& x : v) x /= nrm;
          auto w = rep->apply3(diff, v);
          double r = 0.0;
          for (const auto& x : w) r += std::norm(x);
          worst = std::max(worst, std::sqrt(r));
        }
        e.residual = worst;
        e.status = worst < tol ? CheckStatus::PassNumeric : CheckStatus::Fail;
        e.context += " (32 probes)";
      } else {
        e.status = CheckStatus::Inconclusive;
      }
    }
    out.add(std::move(e));
  }

  // (iii) counit laws, exact
  for (int g = 0; g < pres.num_gens(); ++g) {
    const Poly& dg = (*pres.comult)[static_cast<size_t>(g)];
    Poly l = counit_on_leg(dg, pres, 0);
    Poly r = counit_on_leg(dg, pres, 1);
    Poly gp = Poly::gen(g);
    CheckEntry e;
    e.name = pres.name + "/counit-law/" + pres.gens[static_cast<size_t>(g)].name;
    e.context = "(eps (x) id)Delta = id = (id (x) eps)Delta";
    e.status = (l == gp && r == gp) ? CheckStatus::PassSymbolic : CheckStatus::Fail;
    out.add(std::move(e));
  }
  return out;
}

CheckReport check_coaction(const Presentation& pres, const Rep* rep, double tol) {
  CheckReport out;
  RuleSet rules = rules_for(pres);
  auto basis = coaction_basis_images(pres);
  const PolyMat2& P = basis[1];

  // (i) the image satisfies n's relations: N^2 = 0, NN* + N*N = 1
  PolyMat2 sq = pm_mul(P, P);
  // Psi(n)Psi(n)* + Psi(n)*Psi(n) - 1
  PolyMat2 unit = {basis[0][0] + basis[3][0], basis[0][1] + basis[3][1],
                   basis[0][2] + basis[3][2], basis[0][3] + basis[3][3]};
  unit[0] = unit[0] - Poly::one();
  unit[3] = unit[3] - Poly::one();
  const char* slot[4] = {"11", "12", "21", "22"};
  for (int k = 0; k < 4; ++k) {
    out.add(verdict(pres.name + "/coaction-image/square-" + slot[k],
                    sq[static_cast<size_t>(k)], &rules, rep, 1, tol, "entry of Psi(n)^2"));
    out.add(verdict(pres.name + "/coaction-image/unit-" + slot[k],
                    unit[static_cast<size_t>(k)], &rules, rep, 1, tol,
                    "entry of Psi(n)Psi(n)* + Psi(n)*Psi(n) - 1"));
  }

  // (ii) the coaction square
  for (int k = 0; k < 4; ++k) {
    Poly lhs;
    for (int b = 0; b < 4; ++b)
      lhs = lhs + basis[static_cast<size_t>(b)][static_cast<size_t>(k)] *
                      tensor_leg((*pres.coaction)[static_cast<size_t>(b)], 1);
    Poly rhs = delta_extend((*pres.coaction)[static_cast<size_t>(k)], pres);
    out.add(verdict(pres.name + "/coaction-square/" + slot[k], lhs - rhs, &rules,
                    rep, 2, tol, "(Psi (x) id)Psi - (id (x) Delta)Psi"));
  }

  // (iii) counit compatibility: eps applied to the image gives n back
  {
    CheckEntry e;
    e.name = pres.name + "/coaction-counit";
    e.context = "(id (x) eps)Psi(n) = n";
    bool ok = pres.counit.has_value();
    if (ok) {
      Coeff expect[4] = {Coeff(QScalar(0)), Coeff(QScalar(1)), Coeff(QScalar(0)),
                         Coeff(QScalar(0))};
      for (int k = 0; k < 4; ++k)
        if (!(apply_counit((*pres.coaction)[static_cast<size_t>(k)], pres) ==
              expect[k]))
          ok = false;
    }
    e.status = ok ? CheckStatus::PassSymbolic : CheckStatus::Fail;
    out.add(std::move(e));
  }
  return out;
}

CheckReport check_state_preservation(const Presentation& pres,
                                     const StateSpec& state, const Rep* rep,
                                     double tol) {
  CheckReport out;
  RuleSet rules = rules_for(pres);
  auto basis = coaction_basis_images(pres);
  const char* bname[4] = {"nn*", "n", "n*", "n*n"};
  for (int b = 0; b < 4; ++b) {
    Poly value = Coeff(state.w[0]) * basis[static_cast<size_t>(b)][0] +
                 Coeff(state.w[3]) * basis[static_cast<size_t>(b)][3];
    Poly target = Coeff(state.w[static_cast<size_t>(b)]) * Poly::one();
    out.add(verdict(pres.name + "/state-preservation/" + bname[b], value - target,
                    &rules, rep, 1, tol, "(omega (x) id)Psi(m) - omega(m) 1"));
  }
  return out;
}

StateConstraintDerivation derive_state_constraints() {
  StateConstraintDerivation d;
  const Presentation& uni = builtin_presentation("qmap-m2");
  const Presentation& powers = builtin_presentation("qmap-powers");
  const Presentation& trace = builtin_presentation("qmap-trace");
  StateSpec st = StateSpec::powers();
  auto basis = coaction_basis_images(uni);
  for (int b = 0; b < 4; ++b) {
    Poly value = Coeff(st.w[0]) * basis[static_cast<size_t>(b)][0] +
                 Coeff(st.w[3]) * basis[static_cast<size_t>(b)][3];
    d.constraints.push_back(value - Coeff(st.w[static_cast<size_t>(b)]) * Poly::one());
  }
  d.alpha_constraint = d.constraints[1];

  // the constraint from m = n is (1/(1+q^2)) (alpha + q^2 delta)
  {
    Poly expected =
        Coeff(st.w[0]) * (Poly::gen(uni.gen_index("alpha")) +
                          QScalar::qpow(2) * Poly::gen(uni.gen_index("delta")));
    CheckEntry e;
    e.name = "derive/alpha-forced";
    e.context = "(omega (x) id)Psi(n) = (alpha + q^2 delta)/(1+q^2): forces alpha = -q^2 delta";
    e.status = d.alpha_constraint == expected ? CheckStatus::PassSymbolic
                                              : CheckStatus::Fail;
    d.report.add(std::move(e));
  }

  GensMap pi = map_quotient_pi();
  for (const Poly& rel : uni.relations) d.substituted.push_back(substitute_hom(rel, pi));
  // the two quadratic constraints, scaled by 1+q^2, after the substitution
  Coeff scale{QScalar(ZPoly::one() + ZPoly::q_to(2), ZPoly::one())};
  d.extra.push_back(scale * substitute_hom(d.constraints[0], pi));
  d.extra.push_back(scale * substitute_hom(d.constraints[3], pi));

  // derived set against the canonical presentation
  auto match_into = [](const Poly& p, const std::vector<Poly>& set) {
    for (const Poly& r : set)
      if (poly_matches_up_to_scalar(p, r)) return true;
    return false;
  };
  std::vector<Poly> derived = d.substituted;
  derived.insert(derived.end(), d.extra.begin(), d.extra.end());
  {
    bool fwd = true;
    for (const Poly& p : derived) fwd = fwd && match_into(p, powers.relations);
    CheckEntry e;
    e.name = "derive/derived-subset-of-presentation";
    e.context = "each substituted constraint matches a displayed relation (up to scalar)";
    e.status = fwd ? CheckStatus::PassSymbolic : CheckStatus::Fail;
    d.report.add(std::move(e));
  }
  {
    std::vector<Poly> derived_closed = derived;
    for (const Poly& p : derived) derived_closed.push_back(p.adjoint());
    bool bwd = true;
    for (const Poly& r : powers.relations) bwd = bwd && match_into(r, derived_closed);
    CheckEntry e;
    e.name = "derive/presentation-covered";
    e.context = "each displayed relation matches a derived constraint or its adjoint";
    e.status = bwd ? CheckStatus::PassSymbolic : CheckStatus::Fail;
    d.report.add(std::move(e));
  }
  // q = 1 specialization against the trace-preserving presentation
  {
    std::vector<Poly> at1;
    for (const Poly& p : derived) at1.push_back(p.at_one());
    bool fwd = true;
    for (const Poly& p : at1) fwd = fwd && match_into(p, trace.relations);
    bool bwd = true;
    for (const Poly& r : trace.relations) bwd = bwd && match_into(r, at1);
    CheckEntry e;
    e.name = "derive/q1-matches-trace-presentation";
    e.context = "derived set at q=1 equals the trace-family relation list (term sets)";
    e.status = (fwd && bwd && at1.size() == trace.relations.size())
                   ? CheckStatus::PassSymbolic
                   : CheckStatus::Fail;
    d.report.add(std::move(e));
  }
  return d;
}

CheckReport check_intertwining(const GensMap& gamma, const Rep* target_rep,
                               const RuleSet* target_rules, double tol) {
  CheckReport out;
  const Presentation& src = *gamma.source;
  const Presentation& tgt = *gamma.target;
  const char* slot[4] = {"11", "12", "21", "22"};
  for (int k = 0; k < 4; ++k) {
    Poly diff = substitute_hom((*src.coaction)[static_cast<size_t>(k)], gamma) -
                (*tgt.coaction)[static_cast<size_t>(k)];
    out.add(verdict("intertwine/" + src.name + "->" + tgt.name + "/coaction-" + slot[k],
                    diff, target_rules, target_rep, 1, tol,
                    "(id (x) Gamma)Psi_src(n) = Psi_tgt(n)"));
  }
  if (src.comult && tgt.comult) {
    for (int g = 0; g < src.num_gens(); ++g) {
      Poly lhs = substitute_hom((*src.comult)[static_cast<size_t>(g)], gamma);
      Poly rhs = delta_extend(gamma.images[static_cast<size_t>(g)], tgt);
      out.add(verdict("intertwine/" + src.name + "->" + tgt.name + "/comult-" +
                          src.gens[static_cast<size_t>(g)].name,
                      lhs - rhs, target_rules, target_rep, 2, tol,
                      "(Gamma (x) Gamma)Delta_src = Delta_tgt Gamma"));
    }
  }
  return out;
}

CheckReport check_podles_density(const Rep& rep, double tol) {
  CheckReport out;
  const Presentation& pres = *rep.pres;
  int dim = rep.dim;

  // incremental Gram-Schmidt rank over vectorized matrices
  struct Span {
    std::vector<std::vector<cxd>> basis;
    double tol;
    bool insert(std::vector<cxd> v) {
      for (const auto& b : basis) {
        cxd ip = 0;
        for (size_t k = 0; k < v.size(); ++k) ip += std::conj(b[k]) * v[k];
        for (size_t k = 0; k < v.size(); ++k) v[k] -= ip * b[k];
      }
      double n = 0;
      for (const auto& x : v) n += std::norm(x);
      n = std::sqrt(n);
      if (n < tol) return false;
      for (auto& x : v) x /= n;
      basis.push_back(std::move(v));
      return true;
    }
  };

  // words of degree <= 3 in the generators and their stars
  std::vector<Mat> words;
  words.push_back(Mat::identity(dim));
  std::vector<Mat> letters;
  for (const Mat& g : rep.mats) {
    letters.push_back(g);
    letters.push_back(g.adjoint());
  }
  size_t deg_start = 0;
  for (int deg = 1; deg <= 3; ++deg) {
    size_t deg_end = words.size();
    for (size_t i = deg_start; i < deg_end; ++i)
      for (const Mat& l : letters) words.push_back(words[i] * l);
    deg_start = deg_end;
  }

  Span wspan{{}, tol};
  for (const Mat& w : words) wspan.insert(w.a);
  int rank_w = static_cast<int>(wspan.basis.size());

  // span of Psi(m)(1 (x) b) inside M2 (x) (algebra of the rep)
  Mat P(2 * dim, 2 * dim);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      Mat e = rep.eval((*pres.coaction)[static_cast<size_t>(2 * bi + bj)]);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) P.at(bi * dim + i, bj * dim + j) = e.at(i, j);
    }
  Mat Ps = P.adjoint();
  std::array<Mat, 4> images = {P * Ps, P, Ps, Ps * P};
  Span dspan{{}, tol};
  for (const Mat& m : images)
    for (const Mat& b : words) {
      Mat rb(2 * dim, 2 * dim);
      for (int blk = 0; blk < 2; ++blk)
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            rb.at(blk * dim + i, blk * dim + j) = b.at(i, j);
      dspan.insert((m * rb).a);
    }
  int rank = static_cast<int>(dspan.basis.size());

  CheckEntry e;
  e.name = pres.name + "/podles-density";
  std::ostringstream ctx;
  ctx << "rank " << rank << " of target " << 4 * rank_w
      << " (word-span dimension " << rank_w << ")";
  e.context = ctx.str();
  e.residual = std::abs(rank - 4 * rank_w);
  e.status = rank == 4 * rank_w ? CheckStatus::PassNumeric : CheckStatus::Fail;
  out.add(std::move(e));
  return out;
}

int fixed_point_dimension(const Rep& rep, double tol) {
  const Presentation& pres = *rep.pres;
  int dim = rep.dim;
  Mat P(2 * dim, 2 * dim);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      Mat e = rep.eval((*pres.coaction)[static_cast<size_t>(2 * bi + bj)]);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) P.at(bi * dim + i, bj * dim + j) = e.at(i, j);
    }
  Mat Ps = P.adjoint();
  std::array<Mat, 4> images = {P * Ps, P, Ps, Ps * P};

  auto mask1 = rep.interior_mask(1);
  std::vector<bool> cols(static_cast<size_t>(2 * dim));
  for (int b = 0; b < 2; ++b)
    for (int j = 0; j < dim; ++j)
      cols[static_cast<size_t>(b * dim + j)] = mask1[static_cast<size_t>(j)];

  // columns of the 4-unknown linear system Psi(m) - m (x) 1 = 0
  std::vector<std::vector<cxd>> vecs;
  for (int k = 0; k < 4; ++k) {
    Mat V = images[static_cast<size_t>(k)];
    // subtract m (x) 1 for m = basis element k
    int bi = k / 2, bj = k % 2;
    for (int j = 0; j < dim; ++j) V.at(bi * dim + j, bj * dim + j) -= 1.0;
    std::vector<cxd> v;
    for (int i = 0; i < 2 * dim; ++i)
      for (int j = 0; j < 2 * dim; ++j)
        if (cols[static_cast<size_t>(j)]) v.push_back(V.at(i, j));
    vecs.push_back(std::move(v));
  }
  // pivoted modified Gram-Schmidt: rank = columns with residual >= tol
  // (a Gram-matrix eigenproblem would square the conditioning and lose the
  // near-null direction in solver noise)
  auto nrm = [](const std::vector<cxd>& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
  };
  int rank = 0;
  for (int step = 0; step < 4; ++step) {
    int best = -1;
    double bn = tol;
    for (size_t i = 0; i < vecs.size(); ++i) {
      double n = nrm(vecs[i]);
      if (n >= bn) {
        bn = n;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    ++rank;
    std::vector<cxd> u = std::move(vecs[static_cast<size_t>(best)]);
    vecs.erase(vecs.begin() + best);
    for (auto& x : u) x /= bn;
    for (auto& v : vecs) {
      cxd ip = 0;
      for (size_t k = 0; k < v.size(); ++k) ip += std::conj(u[k]) * v[k];
      for (size_t k = 0; k < v.size(); ++k) v[k] -= ip * u[k];
    }
  }
  return 4 - rank;
}

CheckEntry fuglede_putnam_check(const Mat& a, const Mat& n, double lambda,
                                double tol) {
  double na = op_norm(a), nn = op_norm(n);
  double scale = std::max(na * nn, 1e-300);
  double normality = op_norm(n * n.adjoint() - n.adjoint() * n);
  if (normality > tol * std::max(nn * nn, 1e-300))
    throw HypothesisViolated("operator is not normal: defect " +
                             std::to_string(normality));
  double premise = op_norm(a * n - cxd(lambda) * (n * a));
  if (premise > tol * scale)
    throw HypothesisViolated("premise an = lambda na fails: residual " +
                             std::to_string(premise));
  CheckEntry e;
  e.name = "fuglede-putnam";
  e.context = "a n = lambda n a with n normal implies a n* = lambda n* a";
  e.residual = op_norm(a * n.adjoint() - cxd(lambda) * (n.adjoint() * a)) / scale;
  e.status = e.residual < tol ? CheckStatus::PassNumeric : CheckStatus::Fail;
  return e;
}

SpectralReport spectral_structure_check(const Mat& K, double q, double tol) {
  if (op_norm(K - K.adjoint()) > tol) throw NotSelfAdjoint("K is not self-adjoint");
  auto eig = hermitian_eig(K);
  SpectralReport rep;
  for (auto it = eig.values.rbegin(); it != eig.values.rend(); ++it)
    rep.eigenvalues.push_back(*it);
  for (double v : rep.eigenvalues) {
    if (v < -tol || v > 1.0 + tol)
      throw SpectrumOutOfRange("eigenvalue " + std::to_string(v) + " outside [0,1]");
  }
  rep.gap_clear = true;
  double q2 = q * q;
  for (double v : rep.eigenvalues) {
    if (v > q2 + tol && v < 1.0 - tol) rep.gap_clear = false;
    // classify against {q^(2n)} u {0}
    int best = -1;
    double best_err = std::abs(v);  // distance to 0
    double p = 1.0;
    for (int n = 0; p > tol * 0.01 && n < 4096; ++n, p *= q2) {
      double err = std::abs(v - p);
      if (err < best_err) {
        best_err = err;
        best = n;
      }
    }
    rep.classified.push_back(best);
    rep.worst_classification_error = std::max(rep.worst_classification_error, best_err);
  }
  return rep;
}

CheckReport sqo3_redundancy_report() {
  CheckReport out;
  const Presentation& pres = builtin_presentation("sqo3");
  const std::vector<std::string> dropped = {"p10", "p12", "p17", "p20"};
  Presentation reduced = pres;
  reduced.relations.clear();
  reduced.relation_names.clear();
  reduced.comult.reset();
  reduced.counit.reset();
  reduced.coaction.reset();
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    bool drop = false;
    for (const auto& d : dropped) drop = drop || pres.relation_names[i] == d;
    if (!drop) {
      reduced.relations.push_back(pres.relations[i]);
      reduced.relation_names.push_back(pres.relation_names[i]);
    }
  }
  // two full rounds at degree 6, then a cheap low-degree pass: enough to
  // rewrite all four dropped relations to zero without blowing up
  RuleSet rules = rules_for(reduced, 2, 6);
  complete_once(rules, 4);
  for (const auto& d : dropped) {
    size_t idx = 0;
    for (size_t i = 0; i < pres.relation_names.size(); ++i)
      if (pres.relation_names[i] == d) idx = i;
    auto rr = reduce(pres.relations[idx], rules);
    CheckEntry e;
    e.name = "sqo3/redundancy/" + d;
    e.context = "bounded rewriting from the remaining sixteen relations";
    e.status = rr.status == ReductionStatus::ReducedToZero ? CheckStatus::PassSymbolic
                                                           : CheckStatus::Inconclusive;
    out.add(std::move(e));
  }
  return out;
}

}  // namespace qv
