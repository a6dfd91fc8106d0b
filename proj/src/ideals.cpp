#include "stci/ideals.hpp"

#include <algorithm>
#include <sstream>

namespace stci {

namespace {

unsigned shape_height(const RingSpec& base, bool in_poly,
                      const PrimeIdeal::Shape& shape) {
  struct V {
    const RingSpec& base;
    bool in_poly;
    unsigned operator()(const ZeroShape&) const { return 0; }
    unsigned operator()(const ExtendedBase&) const { return 1; }
    unsigned operator()(const ContractionZero&) const { return 1; }
    unsigned operator()(const MaximalPair&) const { return 2; }
    unsigned operator()(const KernelShape&) const { return 1; }
    unsigned operator()(const QuadPrimeShape& s) const {
      return s.q.is_zero() ? 0 : 1;
    }
  };
  return std::visit(V{base, in_poly}, shape);
}

}  // namespace

PrimeIdeal::PrimeIdeal(RingSpec base, bool in_poly_ring, Shape shape)
    : base_(base), in_poly_(in_poly_ring), height_(0), shape_(std::move(shape)) {
  height_ = shape_height(base_, in_poly_, shape_);
  if (std::holds_alternative<MaximalPair>(shape_) && !in_poly_)
    fail(Errc::BadArgument, "pair shape lives in R[X]");
  if (std::holds_alternative<ContractionZero>(shape_) && !in_poly_)
    fail(Errc::BadArgument, "contraction-zero shape lives in R[X]");
  if (std::holds_alternative<MaximalPair>(shape_)) {
    const auto& mp = std::get<MaximalPair>(shape_);
    if (!mp.f.is_monic()) fail(Errc::BadArgument, "pair shape needs a monic polynomial");
  }
}

std::string PrimeIdeal::shape_name() const {
  struct V {
    std::string operator()(const ZeroShape&) const { return "zero"; }
    std::string operator()(const ExtendedBase&) const { return "extended-base"; }
    std::string operator()(const ContractionZero&) const { return "contraction-zero"; }
    std::string operator()(const MaximalPair&) const { return "maximal-pair"; }
    std::string operator()(const KernelShape&) const { return "evaluation-kernel"; }
    std::string operator()(const QuadPrimeShape&) const { return "quadratic-prime"; }
  };
  return std::visit(V{}, shape_);
}

std::string PrimeIdeal::describe() const {
  std::ostringstream os;
  struct V {
    std::ostream& os;
    void operator()(const ZeroShape&) const { os << "(0)"; }
    void operator()(const ExtendedBase& s) const { os << "(" << to_string(s.a) << ")"; }
    void operator()(const ContractionZero& s) const { os << "(" << to_string(s.f) << ")"; }
    void operator()(const MaximalPair& s) const {
      os << "(" << to_string(s.a) << ", " << to_string(s.f) << ")";
    }
    void operator()(const KernelShape& s) const {
      os << "ker(X -> " << to_string(s.h.image_of_x) << ")";
    }
    void operator()(const QuadPrimeShape& s) const {
      os << "lattice[" << s.q.a() << ", " << s.q.b() << "+" << s.q.c() << "w]";
    }
  };
  std::visit(V{os}, shape_);
  os << " in " << base_.name();
  if (in_poly_) os << "[X]";
  return os.str();
}

// ---------------------------------------------------------------------------
// membership

namespace {

bool coeffwise_divisible(const UniPoly& e, const RingElement& a) {
  for (const auto& c : e.coeffs())
    if (!try_divide(c, a)) return false;
  return true;
}

// reduce mod a coefficientwise, then by the monic f; zero iff e in (a, f)
bool pair_member(const UniPoly& e, const RingElement& a, const UniPoly& f) {
  ResidueRing F(a);
  std::vector<RingElement> r;
  for (const auto& c : e.coeffs()) r.push_back(F.reduce(c));
  UniPoly red(e.ring(), std::move(r));
  while (!red.is_zero() && red.degree() >= f.degree()) {
    unsigned shift = static_cast<unsigned>(red.degree() - f.degree());
    UniPoly term = UniPoly::monomial(red.leading(), shift);
    red = red - poly_mul(term, f);
    std::vector<RingElement> rr;
    for (const auto& c : red.coeffs()) rr.push_back(F.reduce(c));
    red = UniPoly(e.ring(), std::move(rr));
  }
  return red.is_zero();
}

}  // namespace

bool member(const UniPoly& e, const PrimeIdeal& p) {
  if (e.ring() != p.base())
    fail(Errc::MixedRings, "element is not over the ideal's coefficient ring");
  if (!p.in_poly_ring()) {
    if (!e.is_constant())
      fail(Errc::MixedRings, "nonconstant element of a base-ring ideal");
    return member(e.is_zero() ? RingElement::zero(e.ring()) : e.coeff(0), p);
  }
  struct V {
    const UniPoly& e;
    bool operator()(const ZeroShape&) const { return e.is_zero(); }
    bool operator()(const ExtendedBase& s) const { return coeffwise_divisible(e, s.a); }
    bool operator()(const ContractionZero& s) const {
      return try_div_exact(e, s.f).has_value();
    }
    bool operator()(const MaximalPair& s) const { return pair_member(e, s.a, s.f); }
    bool operator()(const KernelShape& s) const { return eval(s.h, e).is_zero(); }
    bool operator()(const QuadPrimeShape&) const {
      fail(Errc::UnsupportedIdealShape, "quadratic primes live in the base ring");
    }
  };
  return std::visit(V{e}, p.shape());
}

bool member(const RingElement& e, const PrimeIdeal& p) {
  if (p.in_poly_ring()) return member(UniPoly::constant(e), p);
  if (e.ring() != p.base()) fail(Errc::MixedRings, "element of a different base ring");
  struct V {
    const RingElement& e;
    bool operator()(const ZeroShape&) const { return e.is_zero(); }
    bool operator()(const ExtendedBase& s) const {
      return try_divide(e, s.a).has_value();
    }
    bool operator()(const QuadPrimeShape& s) const { return s.q.contains(e.as_quad()); }
    bool operator()(const ContractionZero&) const { return false; }  // unreachable
    bool operator()(const MaximalPair&) const { return false; }      // unreachable
    bool operator()(const KernelShape&) const { return false; }      // unreachable
  };
  return std::visit(V{e}, p.shape());
}

PrimeIdeal contract(const PrimeIdeal& p) {
  if (!p.in_poly_ring())
    fail(Errc::BadArgument, "contraction needs a polynomial-ring ideal");
  struct V {
    const PrimeIdeal& p;
    PrimeIdeal operator()(const ZeroShape&) const {
      return PrimeIdeal(p.base(), false, ZeroShape{});
    }
    PrimeIdeal operator()(const ExtendedBase& s) const {
      return PrimeIdeal(p.base(), false, ExtendedBase{s.a});
    }
    PrimeIdeal operator()(const ContractionZero&) const {
      return PrimeIdeal(p.base(), false, ZeroShape{});
    }
    PrimeIdeal operator()(const MaximalPair& s) const {
      return PrimeIdeal(p.base(), false, ExtendedBase{s.a});
    }
    PrimeIdeal operator()(const KernelShape&) const {
      // evaluation restricted to R is injective, so the kernel meets R in 0
      return PrimeIdeal(p.base(), false, ZeroShape{});
    }
    PrimeIdeal operator()(const QuadPrimeShape&) const {
      fail(Errc::UnsupportedIdealShape, "quadratic primes live in the base ring");
    }
  };
  return std::visit(V{p}, p.shape());
}

// ---------------------------------------------------------------------------
// classification

namespace {

[[noreturn]] void not_prime(const std::string& witness) {
  fail(Errc::NotPrime, "not prime: " + witness);
}

PrimeIdeal classify_single_poly(const IdealPresentation& pres, const UniPoly& g,
                                const Config& cfg) {
  const RingSpec& R = pres.base;
  if (!R.is_bezout())
    fail(Errc::UnsupportedIdealShape,
         "single-generator classification needs a Bezout coefficient ring");
  PrimitivePart pp = primitive_part(g);
  if (!pp.content.is_unit())
    not_prime(to_string(pp.content) + " * (" + to_string(pp.primitive) + ")");
  FactorSearch fs = irreducible_over_fractions(pp.primitive, cfg);
  if (!fs.irreducible) {
    if (fs.factor) {
      auto co = try_div_exact(pp.primitive, *fs.factor);
      not_prime("(" + to_string(*fs.factor) + ") * (" +
                (co ? to_string(*co) : std::string("...")) + ")");
    }
    not_prime("reducible over the fraction field");
  }
  return PrimeIdeal(R, true, ContractionZero{pp.primitive});
}

}  // namespace

PrimeIdeal classify(const IdealPresentation& pres, const Config& cfg) {
  const RingSpec& R = pres.base;
  std::vector<UniPoly> gens;
  for (const auto& g : pres.gens)
    if (!g.is_zero()) gens.push_back(g);

  if (gens.empty()) return PrimeIdeal(R, pres.in_poly_ring, ZeroShape{});

  if (!pres.in_poly_ring) {
    if (gens.size() != 1 || !gens[0].is_constant())
      fail(Errc::UnsupportedIdealShape,
           "base-ring ideals are classified from a single element");
    RingElement a = gens[0].coeff(0);
    if (R.kind() == RingKind::QuadraticOrder)
      return classify_quad(QuadIdeal::principal(R.param(), a.as_quad()));
    PrimalityCheck pc = base_prime_check(a);
    if (!pc.prime) not_prime(pc.witness);
    return PrimeIdeal(R, false, ExtendedBase{a});
  }

  if (gens.size() == 1) {
    const UniPoly& g = gens[0];
    if (g.is_constant()) {
      RingElement a = g.coeff(0);
      PrimalityCheck pc = base_prime_check(a);
      if (!pc.prime) not_prime(pc.witness);
      return PrimeIdeal(R, true, ExtendedBase{a});
    }
    return classify_single_poly(pres, g, cfg);
  }

  if (gens.size() == 2) {
    // (a, f) with a a base prime and f monic irreducible mod a
    const UniPoly* cst = nullptr;
    const UniPoly* pol = nullptr;
    for (const auto& g : gens) (g.is_constant() ? cst : pol) = &g;
    if (!cst || !pol)
      fail(Errc::UnsupportedIdealShape,
           "two-generator ideals need one base element and one polynomial");
    RingElement a = cst->coeff(0);
    PrimalityCheck pc = base_prime_check(a);
    if (!pc.prime) not_prime("base element: " + pc.witness);
    if (!pol->is_monic())
      fail(Errc::UnsupportedIdealShape,
           "pair shape needs a monic polynomial generator");
    if (!irreducible_mod(*pol, a))
      not_prime("(" + to_string(*pol) + ") splits modulo " + to_string(a));
    return PrimeIdeal(R, true, MaximalPair{a, *pol});
  }

  fail(Errc::UnsupportedIdealShape,
       "no supported normal form matches " + std::to_string(gens.size()) +
           " generators");
}

PrimeIdeal classify_kernel(const RingSpec& base, const RingElement& image) {
  EvalHom h = make_eval_hom(base, image);
  return PrimeIdeal(base, true, KernelShape{h});
}

PrimeIdeal classify_quad(const QuadIdeal& q) {
  RingSpec R = RingSpec::quadratic_order(q.d());
  if (q.is_zero()) return PrimeIdeal(R, false, ZeroShape{});
  if (!is_prime_quad(q))
    not_prime("lattice of norm " + q.norm().get_str() +
              " is neither prime nor an inert prime square");
  return PrimeIdeal(R, false, QuadPrimeShape{q});
}

IdealPresentation generators_of(const PrimeIdeal& p) {
  struct V {
    const PrimeIdeal& p;
    std::vector<UniPoly> operator()(const ZeroShape&) const { return {}; }
    std::vector<UniPoly> operator()(const ExtendedBase& s) const {
      return {UniPoly::constant(s.a)};
    }
    std::vector<UniPoly> operator()(const ContractionZero& s) const { return {s.f}; }
    std::vector<UniPoly> operator()(const MaximalPair& s) const {
      return {UniPoly::constant(s.a), s.f};
    }
    std::vector<UniPoly> operator()(const KernelShape&) const {
      fail(Errc::UnsupportedIdealShape,
           "evaluation kernels carry no finite generator list");
    }
    std::vector<UniPoly> operator()(const QuadPrimeShape& s) const {
      RingSpec R = RingSpec::quadratic_order(s.q.d());
      std::vector<UniPoly> out;
      for (const auto& v : s.q.lattice_basis())
        out.push_back(UniPoly::constant(RingElement::quad(R, v.u, v.v)));
      return out;
    }
  };
  return IdealPresentation{p.base(), p.in_poly_ring(), std::visit(V{p}, p.shape())};
}

}  // namespace stci
