#pragma once

#include "qv/presentation.hpp"

namespace qv {

// One oriented rule: lhs (a single-leg word, stored on leg 0) rewrites to rhs.
// Invariant: lhs strictly exceeds every word of rhs in the term order, so
// rewriting cannot increase word degree and terminates.
struct RewriteRule {
  Word lhs;
  Poly rhs;
  std::string origin;
};

struct RuleSet {
  std::vector<RewriteRule> rules;
  int max_steps = 10000;
  int max_degree = 12;
};

enum class ReductionStatus { ReducedToZero, NormalFormNonzero, LimitHit };

struct ReductionOutcome {
  Poly normal_form;
  ReductionStatus status = ReductionStatus::NormalFormNonzero;
  int steps = 0;
};

struct UnorientableRelation : std::runtime_error {
  explicit UnorientableRelation(const std::string& m) : std::runtime_error(m) {}
};

// Orient every relation (and its adjoint) of the presentation into rules.
// Throws UnorientableRelation when a relation has no reducible leading term.
RuleSet orient_rules(const Presentation& pres);

// Bounded leftmost-maximal rewriting.  Sound but incomplete: NormalFormNonzero
// is evidence, not proof, of non-membership.  Rules match any tensor leg.
ReductionOutcome reduce(const Poly& p, const RuleSet& rules);

// Overlap S-polynomials of the rule set up to the degree bound (one bounded
// Knuth-Bendix step; the caller may reduce and append survivors).
std::vector<Poly> critical_pairs(const RuleSet& rules, int max_degree);

// Convenience: one round of bounded completion — reduce all critical pairs and
// append the surviving normal forms as new rules.  Returns the number added.
int complete_once(RuleSet& rules, int max_degree);

}  // namespace qv
