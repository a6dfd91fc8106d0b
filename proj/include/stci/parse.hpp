#pragma once

#include <string>
#include <variant>

#include "stci/config.hpp"
#include "stci/ideals.hpp"
#include "stci/poly.hpp"
#include "stci/quadlat.hpp"
#include "stci/rings.hpp"

namespace stci {

// Ring spec grammar: ZZ | QQ | GF(p) | GF(p)[t] | GF(p)[t^2,t^3] |
// QQ[t^2,t^3] | ZZ[sqrt(-5)]
RingSpec parse_ring(const std::string& s);

// Polynomial expression grammar: atoms {integer, t, X, Z, sqrt(-5)},
// operators + - * ^ (exponent binds tightest, integer exponents only),
// parentheses. Errors carry the byte offset.
UniPoly parse_poly(const std::string& s, const RingSpec& ring, const Config& cfg,
                   const char* var = "X");

// constant expression (no X/Z), e.g. a base-ring element
RingElement parse_element(const std::string& s, const RingSpec& ring,
                          const Config& cfg);

// ideal(g1; g2; ...) | ker(X -> expr) | qideal(a; b)
struct ParsedIdeal {
  enum class Kind { Generators, Kernel, Quad } kind;
  IdealPresentation pres;        // Generators
  RingElement kernel_image;      // Kernel: image of X
  QuadIdeal quad;                // Quad
};
ParsedIdeal parse_ideal(const std::string& s, const RingSpec& ring,
                        const Config& cfg);

// classified view of a parsed ideal (side conditions verified)
PrimeIdeal classify_parsed(const ParsedIdeal& pi, const RingSpec& ring,
                           const Config& cfg);

}  // namespace stci
