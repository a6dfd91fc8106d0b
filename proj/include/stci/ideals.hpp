#pragma once

#include <string>
#include <variant>
#include <vector>

#include "stci/config.hpp"
#include "stci/factor.hpp"
#include "stci/poly.hpp"
#include "stci/quadlat.hpp"
#include "stci/rings.hpp"

namespace stci {

// Primes enter in classified normal form; membership is decidable per shape.
struct ZeroShape {
  bool operator==(const ZeroShape&) const = default;
};
struct ExtendedBase {  // (a) in R, or a*R[X]
  RingElement a;
  bool operator==(const ExtendedBase&) const = default;
};
struct ContractionZero {  // height-one prime of R[X] meeting R in 0
  UniPoly f;              // primitive, irreducible over Frac(R)
  bool operator==(const ContractionZero&) const = default;
};
struct MaximalPair {  // (a, f) in R[X], f monic and irreducible mod a
  RingElement a;
  UniPoly f;
  bool operator==(const MaximalPair&) const = default;
};
struct KernelShape {  // ker(X -> image) in R[X]
  EvalHom h;
  bool operator==(const KernelShape& o) const {
    return h.source_coeff == o.h.source_coeff && h.target == o.h.target &&
           h.image_of_x == o.h.image_of_x;
  }
};
struct QuadPrimeShape {  // prime of ZZ[sqrt(d)] as a lattice
  QuadIdeal q;
  bool operator==(const QuadPrimeShape&) const = default;
};

class PrimeIdeal {
public:
  using Shape = std::variant<ZeroShape, ExtendedBase, ContractionZero,
                             MaximalPair, KernelShape, QuadPrimeShape>;

  PrimeIdeal(RingSpec base, bool in_poly_ring, Shape shape);

  const RingSpec& base() const { return base_; }
  bool in_poly_ring() const { return in_poly_; }
  unsigned height() const { return height_; }
  const Shape& shape() const { return shape_; }
  std::string shape_name() const;
  std::string describe() const;

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&shape_);
  }

  bool operator==(const PrimeIdeal&) const = default;

private:
  RingSpec base_;
  bool in_poly_;
  unsigned height_;
  Shape shape_;
};

// Generator-list presentation; base-ring presentations use degree-0 entries.
struct IdealPresentation {
  RingSpec base;
  bool in_poly_ring;
  std::vector<UniPoly> gens;
};

bool member(const UniPoly& e, const PrimeIdeal& p);
bool member(const RingElement& e, const PrimeIdeal& p);

// contraction to the coefficient ring; defined for polynomial ambients
PrimeIdeal contract(const PrimeIdeal& p);

// Recognize a presentation as one of the normal forms, verifying the side
// conditions (primality, primitivity, irreducibility). Throws NotPrime with a
// factorization witness, or UnsupportedIdealShape.
PrimeIdeal classify(const IdealPresentation& pres, const Config& cfg = {});

// normal-form constructors with the same side-condition checks
PrimeIdeal classify_kernel(const RingSpec& base, const RingElement& image);
PrimeIdeal classify_quad(const QuadIdeal& q);

// read-back of the defining generators (KernelShape has no finite list and
// reports UnsupportedIdealShape)
IdealPresentation generators_of(const PrimeIdeal& p);

}  // namespace stci
