#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qv/poly.hpp"

namespace qv {

struct GenSymbol {
  std::string name;
};

// Image of the single M2 generator under a coaction: a 2x2 matrix of polynomials
// over the presented algebra, stored row-major.
using CoactionMatrix = std::array<Poly, 4>;

// Finitely presented *-algebra with optional quantum-structure data.
struct Presentation {
  std::string name;
  std::vector<GenSymbol> gens;
  std::vector<Poly> relations;  // each understood as "= 0"
  std::vector<std::string> relation_names;
  // comultiplication value per generator, over the two-leg copy (legs 0 and 1)
  std::optional<std::vector<Poly>> comult;
  std::optional<std::vector<Coeff>> counit;
  std::optional<CoactionMatrix> coaction;

  int gen_index(const std::string& n) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == n) return static_cast<int>(i);
    return -1;
  }
  int num_gens() const { return static_cast<int>(gens.size()); }
};

struct UnboundGenerator : std::runtime_error {
  explicit UnboundGenerator(const std::string& m) : std::runtime_error(m) {}
};

// Generic letter-wise substitution.  The callback receives (gen, star, leg) and
// returns the full replacement polynomial for that letter.
Poly substitute(const Poly& p, const std::function<Poly(int, bool, int)>& f);

// Retag a single-leg polynomial onto the given leg.
Poly tensor_leg(const Poly& p, int leg);

// *-homomorphism defined on generators by its values on unstarred letters.
struct GensMap {
  const Presentation* source = nullptr;
  const Presentation* target = nullptr;
  std::vector<Poly> images;  // over target generators, single leg

  static GensMap identity(const Presentation& p);
};

// Multiplicative, *-preserving, linear extension of a generator assignment.
// Letters on leg k are substituted by the image retagged to leg k.
Poly substitute_hom(const Poly& p, const GensMap& f);

// Extend the comultiplication of `pres` multiplicatively to a polynomial.
// A letter on leg k of `p` maps into legs (k, k+1, ..) shifted so distinct
// input legs stay disjoint: with `shift` legs per input leg.  For the usual
// one-leg input use delta_extend(p, pres) giving a two-leg output.
Poly delta_extend(const Poly& p, const Presentation& pres);

// Apply Delta to only the chosen leg of a two-leg polynomial, producing a
// three-leg polynomial (the other leg is shifted accordingly).
// which = 0: (Delta (x) id);  which = 1: (id (x) Delta).
Poly delta_on_leg(const Poly& p, const Presentation& pres, int which);

// Apply the counit to the chosen leg of a multi-leg polynomial; remaining legs
// are renumbered down to 0..k-1.
Poly counit_on_leg(const Poly& p, const Presentation& pres, int leg);

// Counit value of a full polynomial (all legs).
Coeff apply_counit(const Poly& p, const Presentation& pres);

// Load-time validation: counit kills every relation (exact).  Throws on failure.
void validate_presentation(const Presentation& pres);

}  // namespace qv
