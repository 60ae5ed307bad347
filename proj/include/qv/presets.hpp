#pragma once

#include "qv/presentation.hpp"

namespace qv {

struct UnknownPreset : std::runtime_error {
  explicit UnknownPreset(const std::string& n)
      : std::runtime_error("unknown preset '" + n + "'") {}
};

// Builtin presentations:
//   m2            — the quantum space M2 (single generator n)
//   qmap-m2       — universal quantum family of maps on M2 (4 generators)
//   qmap-powers   — the q-parameterized quotient preserving the (1,q^2)/(1+q^2)
//                   weighted state (3 generators, 8+2 relations)
//   qmap-trace    — the q=1 (trace-preserving) quotient (9 relations)
//   qmap-omega0   — the q=0 quotient (2 generators, 5 relations)
//   sqo3          — Podles quantum SO(3) (5 generators, 20 relations); the
//                   comultiplication uses the sign-consistent coefficient on
//                   the L^* (x) G term (see sqo3-verbatim for the alternative)
//   sqo3-verbatim — same algebra with the inconsistent -q^-1 L^* (x) G
//                   coefficient kept for reference; fails coalgebra checks
//   so3-classical — commutative presentation of SO(3) in three normal
//                   commuting generators
//   circle        — C(T), one unitary generator
const Presentation& builtin_presentation(const std::string& name);

std::vector<std::string> builtin_preset_names();

// beta -> L, gamma -> -q G, delta -> q^-1 A  (qmap-powers -> sqo3)
GensMap map_lambda_q();
// alpha -> -q^2 delta, others identity  (qmap-m2 -> qmap-powers)
GensMap map_quotient_pi();
// composite qmap-m2 -> sqo3 (quotient followed by the map above)
GensMap map_qmapm2_to_sqo3();
// qmap-trace -> so3-classical: beta -> S, gamma -> T, delta -> R
GensMap map_trace_to_so3();
// qmap-omega0 -> circle: beta -> u, delta -> 0
GensMap map_omega0_to_circle();

}  // namespace qv
