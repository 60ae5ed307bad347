#include "qv/rewrite.hpp"

namespace qv {

namespace {

Word subword(const Word& w, size_t from, size_t to) {
  Word r;
  r.ls.assign(w.ls.begin() + static_cast<long>(from), w.ls.begin() + static_cast<long>(to));
  return r;  // slices of canonical words stay canonical
}

// Find the first position where `lhs` (leg-0 pattern) occurs contiguously in `w`
// on any leg.  Returns (pos, leg) or pos = -1.
std::pair<int, int> find_redex(const Word& w, const Word& lhs) {
  size_t n = w.ls.size(), m = lhs.ls.size();
  if (m == 0 || m > n) return {-1, 0};
  for (size_t i = 0; i + m <= n; ++i) {
    uint8_t leg = w.ls[i].leg;
    bool ok = true;
    for (size_t j = 0; j < m; ++j) {
      const Letter& a = w.ls[i + j];
      const Letter& b = lhs.ls[j];
      if (a.leg != leg || a.gen != b.gen || a.star != b.star) {
        ok = false;
        break;
      }
    }
    if (ok) return {static_cast<int>(i), leg};
  }
  return {-1, 0};
}

void add_rule(RuleSet& rs, const Poly& rel, const std::string& origin) {
  if (rel.is_zero()) return;
  const auto& [lead_w, lead_c] = rel.leading();
  if (lead_w.is_unit())
    throw UnorientableRelation(origin + ": leading term is a scalar");
  // multi-leg relations are rejected here; rules are single-leg patterns
  for (const Letter& l : lead_w.ls)
    if (l.leg != 0)
      throw UnorientableRelation(origin + ": multi-leg relation cannot be oriented");
  Poly rest = rel;
  rest.add_term(lead_w, -lead_c);
  Poly rhs = rest.scaled(-lead_c.inv());
  for (const auto& ex : rs.rules)
    if (ex.lhs == lead_w && ex.rhs == rhs) return;
  rs.rules.push_back({lead_w, std::move(rhs), origin});
}

}  // namespace

RuleSet orient_rules(const Presentation& pres) {
  RuleSet rs;
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    std::string nm =
        i < pres.relation_names.size() ? pres.relation_names[i] : std::to_string(i);
    add_rule(rs, pres.relations[i], pres.name + "/" + nm);
    add_rule(rs, pres.relations[i].adjoint(), pres.name + "/" + nm + "*");
  }
  return rs;
}

ReductionOutcome reduce(const Poly& p, const RuleSet& rules) {
  ReductionOutcome out;
  out.normal_form = p;
  if (p.degree() > rules.max_degree) {
    out.status = ReductionStatus::LimitHit;
    return out;
  }
  while (true) {
    // pick the largest term carrying a redex
    const Word* hit_w = nullptr;
    Coeff hit_c;
    int pos = -1, leg = 0;
    const RewriteRule* rule = nullptr;
    const auto& terms = out.normal_form.terms();
    for (auto it = terms.rbegin(); it != terms.rend() && !hit_w; ++it) {
      for (const auto& r : rules.rules) {
        auto [pp, lg] = find_redex(it->first, r.lhs);
        if (pp >= 0) {
          hit_w = &it->first;
          hit_c = it->second;
          pos = pp;
          leg = lg;
          rule = &r;
          break;
        }
      }
    }
    if (!hit_w) break;
    if (out.steps >= rules.max_steps) {
      out.status = ReductionStatus::LimitHit;
      return out;
    }
    Word pre = subword(*hit_w, 0, static_cast<size_t>(pos));
    Word post = subword(*hit_w, static_cast<size_t>(pos) + rule->lhs.ls.size(),
                        hit_w->ls.size());
    Poly replaced;
    replaced.add_term(pre, hit_c);
    replaced = replaced * tensor_leg(rule->rhs, leg);
    Poly post_p;
    post_p.add_term(post, Coeff(QScalar(1)));
    replaced = replaced * post_p;
    Poly removed;
    removed.add_term(*hit_w, hit_c);
    out.normal_form = out.normal_form - removed + replaced;
    ++out.steps;
  }
  out.status = out.normal_form.is_zero() ? ReductionStatus::ReducedToZero
                                         : ReductionStatus::NormalFormNonzero;
  return out;
}

std::vector<Poly> critical_pairs(const RuleSet& rules, int max_degree) {
  std::vector<Poly> out;
  auto word_poly = [](const Word& w) {
    Poly p;
    p.add_term(w, Coeff(QScalar(1)));
    return p;
  };
  for (const auto& r1 : rules.rules) {
    for (const auto& r2 : rules.rules) {
      size_t n1 = r1.lhs.ls.size(), n2 = r2.lhs.ls.size();
      // proper overlap: a suffix of lhs1 equals a prefix of lhs2
      for (size_t k = 1; k < std::min(n1, n2); ++k) {
        bool match = true;
        for (size_t j = 0; j < k; ++j) {
          const Letter& a = r1.lhs.ls[n1 - k + j];
          const Letter& b = r2.lhs.ls[j];
          if (a.gen != b.gen || a.star != b.star) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        if (static_cast<int>(n1 + n2 - k) > max_degree) continue;
        Word head = subword(r1.lhs, 0, n1 - k);
        Word tail = subword(r2.lhs, k, n2);
        // overlap word = head . lhs2 = lhs1 . tail
        Poly s = r1.rhs * word_poly(tail) - word_poly(head) * r2.rhs;
        if (!s.is_zero()) out.push_back(std::move(s));
      }
      // containment: lhs2 strictly inside lhs1
      if (n2 < n1) {
        for (size_t i = 0; i + n2 <= n1; ++i) {
          bool match = true;
          for (size_t j = 0; j < n2; ++j) {
            const Letter& a = r1.lhs.ls[i + j];
            const Letter& b = r2.lhs.ls[j];
            if (a.gen != b.gen || a.star != b.star) {
              match = false;
              break;
            }
          }
          if (!match) continue;
          Word pre = subword(r1.lhs, 0, i);
          Word post = subword(r1.lhs, i + n2, n1);
          Poly s = r1.rhs - word_poly(pre) * r2.rhs * word_poly(post);
          if (!s.is_zero()) out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

int complete_once(RuleSet& rules, int max_degree) {
  auto pairs = critical_pairs(rules, max_degree);
  int added = 0;
  for (const auto& s : pairs) {
    auto rr = reduce(s, rules);
    if (rr.status == ReductionStatus::NormalFormNonzero) {
      try {
        size_t before = rules.rules.size();
        add_rule(rules, rr.normal_form, "completion");
        add_rule(rules, rr.normal_form.adjoint(), "completion*");
        added += static_cast<int>(rules.rules.size() - before);
      } catch (const UnorientableRelation&) {
        // skip unorientable survivors; bounded completion is best-effort
      }
    }
  }
  return added;
}

}  // namespace qv
