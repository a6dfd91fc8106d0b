#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stci/rings.hpp"

namespace stci {

// Univariate polynomial in X over a RingSpec. Coefficients are degree-indexed
// and canonical; the zero polynomial is the empty sequence.
class UniPoly {
public:
  explicit UniPoly(RingSpec ring) : ring_(ring) {}
  UniPoly(RingSpec ring, std::vector<RingElement> coeffs);

  static UniPoly zero(const RingSpec& ring) { return UniPoly(ring); }
  static UniPoly constant(RingElement c);
  static UniPoly x(const RingSpec& ring);
  // c * X^k
  static UniPoly monomial(RingElement c, unsigned k);

  const RingSpec& ring() const { return ring_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  RingElement coeff(std::size_t k) const;
  const RingElement& leading() const;
  const std::vector<RingElement>& coeffs() const { return coeffs_; }
  bool is_monic() const;

  bool operator==(const UniPoly&) const = default;

private:
  RingSpec ring_;
  std::vector<RingElement> coeffs_;
};

UniPoly poly_add(const UniPoly& a, const UniPoly& b);
UniPoly poly_sub(const UniPoly& a, const UniPoly& b);
UniPoly poly_neg(const UniPoly& a);
UniPoly poly_mul(const UniPoly& a, const UniPoly& b);
UniPoly poly_pow(const UniPoly& a, unsigned n);
UniPoly poly_scale(const RingElement& c, const UniPoly& a);

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) { return poly_add(a, b); }
inline UniPoly operator-(const UniPoly& a, const UniPoly& b) { return poly_sub(a, b); }
inline UniPoly operator*(const UniPoly& a, const UniPoly& b) { return poly_mul(a, b); }
inline UniPoly operator-(const UniPoly& a) { return poly_neg(a); }

// Exact division in R[X]. Empty result iff den does not divide num in R[X]
// (the per-step leading-coefficient test is decisive for that question).
std::optional<UniPoly> try_div_exact(const UniPoly& num, const UniPoly& den);

// Division with remainder by a monic divisor; works over every supported ring.
struct PolyDivRem {
  UniPoly q, r;
};
PolyDivRem divrem_monic(const UniPoly& num, const UniPoly& den);

// Content ideal: the coefficient list, plus a principal generator with Bezout
// witnesses over Bezout rings (principal = sum witness[i] * generators[i]).
struct ContentIdeal {
  RingSpec ring;
  std::vector<RingElement> generators;
  std::optional<RingElement> principal;
  std::vector<RingElement> witness;
};
ContentIdeal content(const UniPoly& f);

// g = content * primitive with the cofactor identity 1 = sum c_i d_i, where
// c_i are the primitive part's coefficients and d_i the content witnesses.
struct PrimitivePart {
  RingElement content;
  UniPoly primitive;
  std::vector<RingElement> cofactors;  // c_i
  std::vector<RingElement> witness;    // d_i
};
PrimitivePart primitive_part(const UniPoly& g);

// Evaluation X -> image_of_x, a ring homomorphism R[X] -> target where the
// coefficient ring embeds into target.
struct EvalHom {
  RingSpec source_coeff;
  RingSpec target;
  RingElement image_of_x;
};
EvalHom make_eval_hom(const RingSpec& source_coeff, RingElement image_of_x);
RingElement eval(const EvalHom& h, const UniPoly& f);

std::string to_string(const UniPoly& f, const char* var = "X");

}  // namespace stci
