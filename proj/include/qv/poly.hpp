#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "qv/qscalar.hpp"

namespace qv {

// One letter of a monomial: a generator reference with a star flag and a tensor leg.
// Generators are referenced by their index in the owning presentation's generator
// list; earlier in the list means higher precedence in the term order.
struct Letter {
  int16_t gen = 0;
  uint8_t star = 0;
  uint8_t leg = 0;

  bool operator==(const Letter&) const = default;
};

// Letter order: by leg, then precedence (earlier-listed generator is LARGER),
// then star with g < g*.
inline int letter_cmp(const Letter& a, const Letter& b) {
  if (a.leg != b.leg) return a.leg < b.leg ? -1 : 1;
  if (a.gen != b.gen) return a.gen > b.gen ? -1 : 1;  // smaller index = larger letter
  if (a.star != b.star) return a.star < b.star ? -1 : 1;
  return 0;
}

// Monomial over starred, leg-tagged generators.  Canonical form keeps letters
// stably sorted by leg; letters on different legs commute, within a leg they
// do not.
struct Word {
  std::vector<Letter> ls;

  Word() = default;
  explicit Word(std::vector<Letter> v) : ls(std::move(v)) { canonicalize(); }
  static Word unit() { return {}; }
  static Word letter(int gen, bool star = false, int leg = 0) {
    Word w;
    w.ls.push_back({static_cast<int16_t>(gen), static_cast<uint8_t>(star ? 1 : 0),
                    static_cast<uint8_t>(leg)});
    return w;
  }

  void canonicalize() {
    std::stable_sort(ls.begin(), ls.end(),
                     [](const Letter& a, const Letter& b) { return a.leg < b.leg; });
  }

  int degree() const { return static_cast<int>(ls.size()); }
  bool is_unit() const { return ls.empty(); }

  Word operator*(const Word& o) const {
    Word r;
    r.ls.reserve(ls.size() + o.ls.size());
    r.ls.insert(r.ls.end(), ls.begin(), ls.end());
    r.ls.insert(r.ls.end(), o.ls.begin(), o.ls.end());
    r.canonicalize();
    return r;
  }

  Word adjoint() const {
    Word r;
    r.ls.reserve(ls.size());
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      Letter l = *it;
      l.star ^= 1;
      r.ls.push_back(l);
    }
    r.canonicalize();
    return r;
  }

  bool operator==(const Word&) const = default;
};

// Degree-lexicographic order.
inline int word_cmp(const Word& a, const Word& b) {
  if (a.ls.size() != b.ls.size()) return a.ls.size() < b.ls.size() ? -1 : 1;
  for (size_t i = 0; i < a.ls.size(); ++i)
    if (int c = letter_cmp(a.ls[i], b.ls[i])) return c;
  return 0;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) < 0; }
};

// Finite linear combination of words with exact complex rational-in-q coefficients.
class Poly {
 public:
  using TermMap = std::map<Word, Coeff, WordLess>;

  Poly() = default;
  static Poly zero() { return {}; }
  static Poly constant(Coeff c) {
    Poly p;
    p.add_term(Word::unit(), std::move(c));
    return p;
  }
  static Poly one() { return constant(Coeff(QScalar(1))); }
  static Poly gen(int g, bool star = false, int leg = 0) {
    Poly p;
    p.add_term(Word::letter(g, star, leg), Coeff(QScalar(1)));
    return p;
  }

  void add_term(Word w, Coeff c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(std::move(w), std::move(c));
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  int degree() const {
    int d = -1;
    for (const auto& [w, c] : t_) d = std::max(d, w.degree());
    return d;
  }
  const TermMap& terms() const { return t_; }

  // Largest term in the word order.
  const std::pair<const Word, Coeff>& leading() const { return *t_.rbegin(); }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
  }
  Poly operator-() const {
    Poly r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [w1, c1] : t_)
      for (const auto& [w2, c2] : o.t_) r.add_term(w1 * w2, c1 * c2);
    return r;
  }
  Poly scaled(const Coeff& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : t_) r.add_term(w, k * c);
    return r;
  }

  // Antilinear antihomomorphism: words reversed and starred, coefficients conjugated.
  Poly adjoint() const {
    Poly r;
    for (const auto& [w, c] : t_) r.add_term(w.adjoint(), c.conj());
    return r;
  }

  // Exact specialization q := 1 of every coefficient.
  Poly at_one() const {
    Poly r;
    for (const auto& [w, c] : t_) r.add_term(w, c.at_one());
    return r;
  }

  bool operator==(const Poly& o) const { return t_ == o.t_; }

 private:
  TermMap t_;
};

inline Poly operator*(const Coeff& c, const Poly& p) { return p.scaled(c); }
inline Poly operator*(const QScalar& s, const Poly& p) { return p.scaled(Coeff(s)); }

}  // namespace qv
