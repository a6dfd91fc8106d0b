#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stci/config.hpp"
#include "stci/rings.hpp"

namespace stci {

// Ideal of ZZ[sqrt(d)] as a rank-2 lattice over the basis {1, sqrt(d)},
// stored in Hermite normal form: rows (a, 0) and (b, c) with a, c > 0,
// c | a, c | b, 0 <= b < a. The zero ideal is a = b = c = 0.
class QuadIdeal {
public:
  static QuadIdeal zero(long d);
  static QuadIdeal whole(long d);  // (1)
  static QuadIdeal principal(long d, const QuadElt& g);
  // lattice closure of the given ring generators (each g contributes g and
  // sqrt(d)*g)
  static QuadIdeal from_generators(long d, const std::vector<QuadElt>& gens);

  long d() const { return d_; }
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  mpz_class norm() const { return a_ * c_; }
  bool is_zero() const { return a_ == 0; }
  bool is_whole() const { return a_ == 1 && c_ == 1; }

  bool contains(const QuadElt& e) const;
  std::vector<QuadElt> lattice_basis() const;

  bool operator==(const QuadIdeal&) const = default;

private:
  QuadIdeal(long d, mpz_class a, mpz_class b, mpz_class c)
      : d_(d), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  static QuadIdeal hnf_from_vectors(long d, std::vector<QuadElt> vecs);

  long d_;
  mpz_class a_, b_, c_;
};

QuadIdeal quad_mul(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal quad_pow(const QuadIdeal& i, unsigned m);

mpz_class quad_norm_elt(long d, const QuadElt& e);  // u^2 - d v^2

// Principality by norm-form enumeration (complete for d < 0): a generator b
// with (b) = i, sign-normalized so the first nonzero coordinate is positive.
// The `parallel` variant splits the candidate scan across threads; both pick
// the same candidate (least |v|, then positive v, deterministic).
std::optional<QuadElt> is_principal(const QuadIdeal& i);
std::optional<QuadElt> is_principal_parallel(const QuadIdeal& i);

// norm is a rational prime, or the ideal is (q) for an inert prime q
bool is_prime_quad(const QuadIdeal& i);

struct TorsionWitness {
  unsigned m;  // least power with p^m principal
  QuadElt b;   // generator of p^m
};
TorsionWitness torsion_witness(const QuadIdeal& p, const Config& cfg = {});

std::string to_string_quad(long d, const QuadElt& e);

}  // namespace stci
