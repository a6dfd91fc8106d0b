#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stci/error.hpp"

namespace stci {

// The supported coefficient rings. One-dimensional rings only, plus the two
// fields that occur as residue/fraction data.
enum class RingKind {
  Integers,            // ZZ
  Rationals,           // QQ
  PrimeField,          // GF(p)
  PolyOverPrimeField,  // GF(p)[t]
  PolyOverRationals,   // QQ[t] (normalization of QQ[t^2,t^3]; internal)
  MonomialSubring,     // K[t^2,t^3], K = GF(p) or QQ
  QuadraticOrder,      // ZZ[sqrt(d)], d squarefree, d < 0, d % 4 != 1
};

class RingSpec {
public:
  static RingSpec integers() { return {RingKind::Integers, 0}; }
  static RingSpec rationals() { return {RingKind::Rationals, 0}; }
  static RingSpec prime_field(long p);
  static RingSpec poly_over_prime_field(long p);
  static RingSpec poly_over_rationals() { return {RingKind::PolyOverRationals, 0}; }
  static RingSpec monomial_subring(long p);  // p = 0 means QQ coefficients
  static RingSpec quadratic_order(long d);

  RingKind kind() const { return kind_; }
  long param() const { return param_; }

  long characteristic() const;
  bool is_normal() const;
  bool is_bezout() const;
  int krull_dim() const;
  bool is_field() const;
  // carries a dense t-coefficient payload
  bool is_tpoly() const;

  std::string name() const;

  bool operator==(const RingSpec&) const = default;

private:
  RingSpec(RingKind k, long p) : kind_(k), param_(p) {}
  RingKind kind_;
  long param_;  // p for characteristic-p kinds, d for QuadraticOrder
};

// Dense coefficients in t, index = exponent, no trailing zeros. In
// characteristic p every entry is an integer residue in [0, p).
struct TPoly {
  std::vector<mpq_class> c;
  bool operator==(const TPoly&) const = default;
};

// u + v*sqrt(d)
struct QuadElt {
  mpz_class u, v;
  bool operator==(const QuadElt&) const = default;
};

class RingElement {
public:
  using Payload = std::variant<mpz_class, mpq_class, TPoly, QuadElt>;

  // Canonicalizes on construction; throws BadArgument on payloads that do not
  // belong to the ring (wrong variant, t^1 term in a monomial subring,
  // denominator divisible by p).
  RingElement(RingSpec ring, Payload payload);

  static RingElement zero(const RingSpec& ring);
  static RingElement one(const RingSpec& ring);
  static RingElement from_int(const RingSpec& ring, const mpz_class& n);
  static RingElement from_int(const RingSpec& ring, long n) {
    return from_int(ring, mpz_class(n));
  }
  // t^k in a t-carrying ring (k != 1 when the ring is a monomial subring)
  static RingElement t_power(const RingSpec& ring, unsigned k);
  static RingElement quad(const RingSpec& ring, mpz_class u, mpz_class v);

  const RingSpec& ring() const { return ring_; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  const mpz_class& as_int() const;
  const mpq_class& as_rat() const;
  const TPoly& as_tpoly() const;
  const QuadElt& as_quad() const;

  // coefficient of t^k (t-carrying rings only)
  mpq_class t_coeff(std::size_t k) const;
  int t_degree() const;  // -1 for zero

  bool operator==(const RingElement&) const = default;

private:
  RingSpec ring_;
  Payload payload_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_pow(const RingElement& a, unsigned n);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return ring_add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return ring_sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }
inline RingElement operator-(const RingElement& a) { return ring_neg(a); }

// Exact division x / d, empty if d = 0 or d does not divide x in the ring.
// For monomial subrings the quotient must itself be t^1-free.
std::optional<RingElement> try_divide(const RingElement& x, const RingElement& d);

// Euclidean division for ZZ, GF(p)[t], QQ[t] and the fields; empty elsewhere.
// Remainders are canonical: in [0, |d|) over ZZ, deg r < deg d over K[t].
struct DivMod {
  RingElement q, r;
};
std::optional<DivMod> euclid_divmod(const RingElement& x, const RingElement& d);

// gcd with Bezout witnesses: g = s*x + t*y, g canonical (nonnegative over ZZ,
// monic over K[t], 0 or 1 over fields).
struct BezoutTriple {
  RingElement g, s, t;
};
BezoutTriple gcd_bezout(const RingElement& x, const RingElement& y);

// inverse of x modulo m (ZZ or GF(p)[t]); requires gcd(x, m) = 1
RingElement mod_inverse(const RingElement& x, const RingElement& m);

// The inclusion K[t^2,t^3] -> K[t], identity on representations.
struct NormalizationData {
  RingSpec source;  // MonomialSubring
  RingSpec target;  // PolyOverPrimeField or PolyOverRationals
};

NormalizationData normalization_of(const RingSpec& monomial_ring);
// true iff e (an element of nd.target) lies in nd.source, i.e. its t^1
// coefficient vanishes
bool subring_member(const RingElement& e, const NormalizationData& nd);
RingElement embed(const NormalizationData& nd, const RingElement& e);
std::optional<RingElement> lift(const NormalizationData& nd, const RingElement& e);

// Minimal coefficient embeddings used by evaluation homomorphisms:
// identity, MonomialSubring -> K[t], ZZ -> QQ.
RingElement embed_into(const RingElement& e, const RingSpec& target);
bool can_embed_into(const RingSpec& from, const RingSpec& into);

std::string to_string(const RingElement& e);
std::string rat_string(const mpq_class& q);

}  // namespace stci
