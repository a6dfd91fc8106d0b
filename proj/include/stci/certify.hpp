#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stci/config.hpp"
#include "stci/ideals.hpp"
#include "stci/quadlat.hpp"
#include "stci/verify.hpp"

namespace stci {

struct TraceStep {
  std::string rule;    // short machine key for the derivation rule applied
  std::string detail;  // human-readable account
};

// Generator list with rad(generators) = target and exactly height-many
// generators; exponent hints bound the outward verification search.
struct Certificate {
  PrimeIdeal target;
  std::vector<UniPoly> generators;
  std::vector<unsigned> exponent_hints;
  std::vector<TraceStep> trace;
  unsigned extension_vars = 0;  // how many fresh variables the target was
                                // extended by (flat extension)
  std::optional<RadicalProof> verification;
};

// Attaches a full rad_equal proof and asserts the size law; every
// construction below finishes through this.
Certificate seal_certificate(Certificate cert, const Config& cfg);

// Dispatch over the classified shape of a prime of R[X], R a Bezout domain
// of dimension one (ZZ or GF(p)[t]); evaluation kernels over a monomial
// subring take the characteristic-p descent path.
Certificate certify_prime(const PrimeIdeal& p, const Config& cfg = {});

// Height-one primes meeting R in zero: certificate {f} from the primitive
// part of any nonzero member g, discarding factors outside the prime.
Certificate certify_contraction_zero(const PrimeIdeal& p, const UniPoly& g,
                                     const Config& cfg = {});

// Evaluation kernels over K[t^2,t^3] in characteristic p: push the
// normalization's generator back into the subring as a p-th power.
Certificate frobenius_descent(const PrimeIdeal& p, const Config& cfg = {});

// The characteristic-zero failure certificate: no single polynomial can
// generate ker(X -> a) up to radical when a lies outside the ring.
struct ObstructionReport {
  RingSpec ring;
  RingElement adjoined;                 // a, in the normalization
  std::string forced_form;              // shape any candidate generator must take
  UniPoly monic_witness;                // monic polynomial of the ring vanishing at a
  unsigned n_checked = 0;               // exhaustive range
  std::vector<RingElement> failing;     // -n*a for n = 1..n_checked
  std::string conclusion;
  std::vector<TraceStep> trace;
};
ObstructionReport normality_obstruction(const RingSpec& ring, const RingElement& a,
                                        const Config& cfg = {});

// Replays the degree comparison forcing a radical generator of an extended
// base prime to be constant, then checks consistency of rad(b) = P.
struct ConstantDescentResult {
  RingElement b;
  unsigned n;        // a^n = b * cofactor
  RingElement cofactor;
  std::optional<TorsionWitness> torsion;  // quadratic-order consistency
  std::vector<TraceStep> trace;
};
ConstantDescentResult constant_descent(const UniPoly& f, const PrimeIdeal& p,
                                       const RingElement& a, const Config& cfg = {});

// From rad(gens) = M R[X] down to a single base element with M = rad(a):
// contents of the generators, then their gcd.
struct DescendResult {
  RingElement a;
  std::vector<RingElement> contents;
  std::vector<TraceStep> trace;
};
DescendResult descend_certificate(const IdealPresentation& gens, const PrimeIdeal& m,
                                  const Config& cfg = {});

// Flat extension by a fresh variable; the caller promises the target extends
// to the extension prime, recorded in the trace.
Certificate extend_certificate(const Certificate& c, const std::string& promise);

std::string extension_variable_name(unsigned k);  // Z, Z2, Z3, ...

}  // namespace stci
