#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stci/config.hpp"
#include "stci/poly.hpp"
#include "stci/rings.hpp"

namespace stci {

bool is_prime_int(const mpz_class& n);
// smallest prime factor by trial division; empty for |n| < 2
std::optional<mpz_class> smallest_prime_factor(const mpz_class& n);

// R/(a) for Euclidean R and prime a, or a field R itself. Elements are
// canonical representatives in R.
class ResidueRing {
public:
  explicit ResidueRing(RingSpec field);
  explicit ResidueRing(RingElement modulus);

  const RingSpec& ring() const { return ring_; }
  const std::optional<RingElement>& modulus() const { return modulus_; }
  mpz_class order() const;  // |R/(a)| (fields: |R|, finite ones only)

  RingElement reduce(const RingElement& x) const;
  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement sub(const RingElement& x, const RingElement& y) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement inv(const RingElement& x) const;
  RingElement zero() const { return RingElement::zero(ring_); }
  RingElement one() const { return RingElement::one(ring_); }

private:
  RingSpec ring_;
  std::optional<RingElement> modulus_;
};

// is (a) a nonzero prime ideal of the base ring?
struct PrimalityCheck {
  bool prime;
  std::string witness;  // a factorization when not prime
};
PrimalityCheck base_prime_check(const RingElement& a);

// monic f irreducible in (R/(a))[X]? Rabin's test; a must be prime in R.
bool irreducible_mod(const UniPoly& f, const RingElement& a);

// Irreducibility of a primitive polynomial over the fraction field of its
// coefficient ring, by bounded complete search (mod-p screens + Kronecker
// over ZZ/QQ, divisor enumeration over GF(p)[t], Rabin over finite fields).
struct FactorSearch {
  bool irreducible;
  std::optional<UniPoly> factor;  // witness when reducible
  std::string note;               // method and completeness bound
};
FactorSearch irreducible_over_fractions(const UniPoly& f, const Config& cfg);

// Enumerates the elements of a finite coefficient slice: all residues of
// GF(p), all of GF(p)[t] with t-degree <= cap, the t^1-free ones of a
// monomial subring. Used by trial factorization and the brute-force oracle.
class CoeffEnumerator {
public:
  CoeffEnumerator(RingSpec ring, unsigned t_degree_cap);
  unsigned long long size() const { return size_; }
  RingElement at(unsigned long long index) const;

private:
  RingSpec ring_;
  std::vector<unsigned> exponents_;  // t-exponents in play
  unsigned long long size_;
};

}  // namespace stci
