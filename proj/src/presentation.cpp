#include "qv/presentation.hpp"

namespace qv {

Poly substitute(const Poly& p, const std::function<Poly(int, bool, int)>& f) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Poly term = Poly::constant(c);
    for (const Letter& l : w.ls) term = term * f(l.gen, l.star != 0, l.leg);
    out = out + term;
  }
  return out;
}

Poly tensor_leg(const Poly& p, int leg) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Word nw = w;
    for (Letter& l : nw.ls) l.leg = static_cast<uint8_t>(leg);
    nw.canonicalize();
    out.add_term(nw, c);
  }
  return out;
}

GensMap GensMap::identity(const Presentation& p) {
  GensMap m;
  m.source = &p;
  m.target = &p;
  for (int g = 0; g < p.num_gens(); ++g) m.images.push_back(Poly::gen(g));
  return m;
}

Poly substitute_hom(const Poly& p, const GensMap& f) {
  return substitute(p, [&](int g, bool star, int leg) {
    if (g < 0 || g >= static_cast<int>(f.images.size()))
      throw UnboundGenerator("generator index out of range in substitution");
    Poly img = f.images[static_cast<size_t>(g)];
    if (star) img = img.adjoint();
    return tensor_leg(img, leg);
  });
}

namespace {
// Shift every leg of p by `shift`.
Poly shift_legs(const Poly& p, int shift) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Word nw = w;
    for (Letter& l : nw.ls) l.leg = static_cast<uint8_t>(l.leg + shift);
    nw.canonicalize();
    out.add_term(nw, c);
  }
  return out;
}
}  // namespace

Poly delta_extend(const Poly& p, const Presentation& pres) {
  if (!pres.comult) throw std::runtime_error("presentation has no comultiplication");
  const auto& d = *pres.comult;
  return substitute(p, [&](int g, bool star, int leg) {
    Poly img = d[static_cast<size_t>(g)];
    if (star) img = img.adjoint();
    // input leg k occupies output legs (2k, 2k+1)
    return shift_legs(img, 2 * leg);
  });
}

Poly delta_on_leg(const Poly& p, const Presentation& pres, int which) {
  if (!pres.comult) throw std::runtime_error("presentation has no comultiplication");
  const auto& d = *pres.comult;
  return substitute(p, [&](int g, bool star, int leg) {
    Poly img;
    if (leg == which) {
      img = d[static_cast<size_t>(g)];
      if (star) img = img.adjoint();
      img = shift_legs(img, which);  // occupies legs (which, which+1)
    } else {
      int out_leg = leg < which ? leg : leg + 1;
      img = Poly::gen(g, star, out_leg);
    }
    return img;
  });
}

Poly counit_on_leg(const Poly& p, const Presentation& pres, int leg) {
  if (!pres.counit) throw std::runtime_error("presentation has no counit");
  const auto& eps = *pres.counit;
  return substitute(p, [&](int g, bool star, int lg) {
    if (lg == leg) {
      Coeff v = eps[static_cast<size_t>(g)];
      if (star) v = v.conj();
      return Poly::constant(v);
    }
    int out_leg = lg < leg ? lg : lg - 1;
    return Poly::gen(g, star, out_leg);
  });
}

Coeff apply_counit(const Poly& p, const Presentation& pres) {
  if (!pres.counit) throw std::runtime_error("presentation has no counit");
  const auto& eps = *pres.counit;
  Coeff total;
  for (const auto& [w, c] : p.terms()) {
    Coeff v = c;
    for (const Letter& l : w.ls) {
      Coeff e = eps[static_cast<size_t>(l.gen)];
      if (l.star) e = e.conj();
      v = v * e;
    }
    total = total + v;
  }
  return total;
}

void validate_presentation(const Presentation& pres) {
  for (const auto& rel : pres.relations)
    for (const auto& [w, c] : rel.terms())
      for (const Letter& l : w.ls)
        if (l.gen < 0 || l.gen >= pres.num_gens())
          throw std::runtime_error(pres.name + ": relation mentions unknown generator");
  if (pres.counit) {
    for (size_t i = 0; i < pres.relations.size(); ++i) {
      Coeff v = apply_counit(pres.relations[i], pres);
      if (!v.is_zero())
        throw std::runtime_error(pres.name + ": counit does not kill relation " +
                                 (i < pres.relation_names.size() ? pres.relation_names[i]
                                                                 : std::to_string(i)));
    }
  }
}

}  // namespace qv
