#pragma once

#include <functional>

#include "qv/presentation.hpp"

namespace qv {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(l) + ":" +
                           std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

// A generator map declared in a spec file; images are over the named target.
struct ParsedMap {
  std::string name;
  std::string target;              // preset id or empty for self
  std::vector<Poly> images;        // indexed like the source generators
};

struct ParsedSpec {
  Presentation pres;
  std::vector<ParsedMap> maps;
};

// Resolves a presentation name (used by MAP sections) to its generator list.
using PresResolver = std::function<const Presentation&(const std::string&)>;

// Parse the text DSL.  Sections: GENERATORS, RELATIONS, COMULT, COUNIT,
// COACTION, MAP.  `resolver` may be null when the file declares no MAP section
// with an external target.
ParsedSpec parse_algebra_spec(const std::string& src, const PresResolver& resolver = nullptr);

// Parse a single expression over the given presentation's generators.
Poly parse_expression(const std::string& src, const Presentation& pres);

// Canonical DSL text for a presentation; parse(print(p)) == p.
std::string print_presentation(const Presentation& pres);

// Canonical text for one polynomial (multi-leg terms use the (x) separator).
std::string print_poly(const Poly& p, const Presentation& pres);

}  // namespace qv
