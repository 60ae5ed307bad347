#pragma once

#include <optional>

#include "qv/reps.hpp"
#include "qv/rewrite.hpp"

namespace qv {

enum class CheckStatus { PassSymbolic, PassNumeric, Inconclusive, Fail };

const char* status_name(CheckStatus s);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Inconclusive;
  double residual = 0.0;  // meaningful for numeric outcomes
  std::string context;

  bool failed() const { return status == CheckStatus::Fail; }
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  void add(CheckEntry e) { entries.push_back(std::move(e)); }
  void merge(const CheckReport& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
  }
  bool all_passed() const {
    for (const auto& e : entries)
      if (e.failed()) return false;
    return true;
  }
  const CheckEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

// Oriented rules of the presentation plus `completion_rounds` rounds of bounded
// critical-pair completion (adjoint-closed).
RuleSet rules_for(const Presentation& pres, int completion_rounds = 2,
                  int max_degree = 8);

// State on M2 given by its weights on the basis {nn*, n, n*, n*n}.
struct StateSpec {
  std::array<QScalar, 4> w;
  static StateSpec powers();  // symbolic q: (1/(1+q^2), 0, 0, q^2/(1+q^2))
  static StateSpec trace();   // (1/2, 0, 0, 1/2)
  static StateSpec omega0();  // (1, 0, 0, 0)
};

// 2x2 matrix over the presented algebra, row-major.
using PolyMat2 = std::array<Poly, 4>;
PolyMat2 pm_mul(const PolyMat2& x, const PolyMat2& y);
PolyMat2 pm_adjoint(const PolyMat2& x);
PolyMat2 pm_sub(const PolyMat2& x, const PolyMat2& y);
// images of the M2 basis {nn*, n, n*, n*n} under the coaction of pres
std::array<PolyMat2, 4> coaction_basis_images(const Presentation& pres);

// One relation entry per presentation relation, evaluated in rep on the
// interior subspace.
CheckReport check_relations(const Rep& rep, double tol);

// Images of the source relations vanish in the target: symbolically under
// `rules` when given, numerically in `rep` when given.
CheckReport check_hom(const GensMap& f, const Rep* rep, const RuleSet* rules,
                      double tol);

// (i) Delta(rel) = 0, (ii) coassociativity on generators (three legs, seeded
// matrix-free probes), (iii) counit laws, symbolic-exact.
CheckReport check_comultiplication(const Presentation& pres, const Rep* rep,
                                   double tol, uint64_t seed = 1);

// (i) the coaction image satisfies n's relations, (ii) the coaction square,
// (iii) counit compatibility.
CheckReport check_coaction(const Presentation& pres, const Rep* rep, double tol);

// (omega (x) id) Psi(m) = omega(m) 1 on the four basis elements.
CheckReport check_state_preservation(const Presentation& pres,
                                     const StateSpec& state, const Rep* rep,
                                     double tol);

// Symbolic derivation: the four state constraints of the universal family on
// M2, the forced substitution alpha = -q^2 delta, and the comparison of the
// substituted relation set with qmap-powers (and with qmap-trace at q=1).
struct StateConstraintDerivation {
  std::vector<Poly> constraints;        // over qmap-m2, one per basis element
  Poly alpha_constraint;                // the linear one forcing alpha
  std::vector<Poly> substituted;        // relations after the substitution (over qmap-powers)
  std::vector<Poly> extra;              // substituted quadratic state constraints
  CheckReport report;
};
StateConstraintDerivation derive_state_constraints();

// (id (x) Gamma) Psi_src = Psi_tgt on n, and (Gamma (x) Gamma) Delta_src =
// Delta_tgt Gamma on generators.
CheckReport check_intertwining(const GensMap& gamma, const Rep* target_rep,
                               const RuleSet* target_rules, double tol);

// Numeric replay of the identity chain behind the embedding of the universal
// q-family into Podles quantum SO(3), including the 4x4 unitary and the
// antipode-table inverse check.
CheckReport proof_replay(double q, int dim, double tol);

// Span of { Psi(m)(1 (x) b) : m in basis of M2, b a word of degree <= 3 }
// compared against 4 * dim(span of the word matrices themselves).
CheckReport check_podles_density(const Rep& rep, double tol = 1e-9);

// Dimension of { m in M2 : Psi(m) = m (x) 1 } in the given representation.
int fixed_point_dimension(const Rep& rep, double tol = 1e-8);

// Fuglede-Putnam special case: n normal and a n = lambda n a imply
// a n* = lambda n* a.  Throws HypothesisViolated when the premise fails.
struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& m) : std::runtime_error(m) {}
};
CheckEntry fuglede_putnam_check(const Mat& a, const Mat& n, double lambda,
                                double tol);

// Eigenvalues of a self-adjoint 0 <= K <= 1 classified against {q^(2n)} u {0};
// verifies spec(K) avoids the open gap ]q^2, 1[.
struct NotSelfAdjoint : std::runtime_error {
  explicit NotSelfAdjoint(const std::string& m) : std::runtime_error(m) {}
};
struct SpectrumOutOfRange : std::runtime_error {
  explicit SpectrumOutOfRange(const std::string& m) : std::runtime_error(m) {}
};
struct SpectralReport {
  std::vector<double> eigenvalues;  // descending
  std::vector<int> classified;      // exponent n for q^(2n), or -1 for 0
  bool gap_clear = false;
  double worst_classification_error = 0.0;
};
SpectralReport spectral_structure_check(const Mat& K, double q, double tol);

// Bounded-rewriting evidence for the redundancy of the commutation relations
// p10/p12/p17/p20 relative to the remaining sixteen; outcome is reported, not
// asserted.
CheckReport sqo3_redundancy_report();

}  // namespace qv
