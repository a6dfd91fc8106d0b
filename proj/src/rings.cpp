#include "stci/rings.hpp"

#include <algorithm>
#include <sstream>

namespace stci {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MixedRings: return "MixedRings";
    case Errc::NotBezout: return "NotBezout";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::NotPrime: return "NotPrime";
    case Errc::UnsupportedIdealShape: return "UnsupportedIdealShape";
    case Errc::NotInIdeal: return "NotInIdeal";
    case Errc::SubringEscape: return "SubringEscape";
    case Errc::CharacteristicZero: return "CharacteristicZero";
    case Errc::ElementActuallyInRing: return "ElementActuallyInRing";
    case Errc::DegreeObstruction: return "DegreeObstruction";
    case Errc::NotRadicalEqual: return "NotRadicalEqual";
    case Errc::TorsionBoundExceeded: return "TorsionBoundExceeded";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NotProvenAtBound: return "NotProvenAtBound";
    case Errc::CapTooLarge: return "CapTooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownRing: return "UnknownRing";
    case Errc::UnknownVerb: return "UnknownVerb";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

bool is_squarefree_long(long d) {
  long n = d < 0 ? -d : d;
  for (long q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return true;
}

}  // namespace

RingSpec RingSpec::prime_field(long p) {
  if (!is_prime_long(p)) fail(Errc::BadArgument, "GF(p) needs a prime p");
  return {RingKind::PrimeField, p};
}

RingSpec RingSpec::poly_over_prime_field(long p) {
  if (!is_prime_long(p)) fail(Errc::BadArgument, "GF(p)[t] needs a prime p");
  return {RingKind::PolyOverPrimeField, p};
}

RingSpec RingSpec::monomial_subring(long p) {
  if (p != 0 && !is_prime_long(p))
    fail(Errc::BadArgument, "K[t^2,t^3] needs K = GF(p) or QQ");
  return {RingKind::MonomialSubring, p};
}

RingSpec RingSpec::quadratic_order(long d) {
  // imaginary, squarefree, maximal at 2: keeps norm-form enumeration complete
  // and ZZ[sqrt(d)] integrally closed
  if (d >= 0 || !is_squarefree_long(d) || ((d % 4 + 4) % 4) == 1)
    fail(Errc::BadArgument, "quadratic order needs squarefree d < 0, d mod 4 != 1");
  return {RingKind::QuadraticOrder, d};
}

long RingSpec::characteristic() const {
  switch (kind_) {
    case RingKind::PrimeField:
    case RingKind::PolyOverPrimeField:
      return param_;
    case RingKind::MonomialSubring:
      return param_;
    default:
      return 0;
  }
}

bool RingSpec::is_normal() const { return kind_ != RingKind::MonomialSubring; }

bool RingSpec::is_bezout() const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::PolyOverPrimeField:
    case RingKind::PolyOverRationals:
      return true;
    default:
      return false;
  }
}

int RingSpec::krull_dim() const { return is_field() ? 0 : 1; }

bool RingSpec::is_field() const {
  return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField;
}

bool RingSpec::is_tpoly() const {
  return kind_ == RingKind::PolyOverPrimeField ||
         kind_ == RingKind::PolyOverRationals ||
         kind_ == RingKind::MonomialSubring;
}

std::string RingSpec::name() const {
  switch (kind_) {
    case RingKind::Integers: return "ZZ";
    case RingKind::Rationals: return "QQ";
    case RingKind::PrimeField: return "GF(" + std::to_string(param_) + ")";
    case RingKind::PolyOverPrimeField:
      return "GF(" + std::to_string(param_) + ")[t]";
    case RingKind::PolyOverRationals: return "QQ[t]";
    case RingKind::MonomialSubring:
      return (param_ ? "GF(" + std::to_string(param_) + ")" : std::string("QQ")) +
             "[t^2,t^3]";
    case RingKind::QuadraticOrder:
      return "ZZ[sqrt(" + std::to_string(param_) + ")]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// coefficient-field helpers for the t-polynomial payloads (p = 0 means QQ)

namespace {

mpq_class fp_reduce(const mpq_class& x, long p) {
  if (p == 0) {
    mpq_class r = x;
    r.canonicalize();
    return r;
  }
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class mp(p);
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), mp.get_mpz_t());
  if (den != 1) {
    mpz_class deninv;
    mpz_fdiv_r(den.get_mpz_t(), den.get_mpz_t(), mp.get_mpz_t());
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mp.get_mpz_t()) == 0)
      fail(Errc::BadArgument, "denominator divisible by p");
    num = num * deninv;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), mp.get_mpz_t());
  }
  return mpq_class(num);
}

mpq_class fp_inv(const mpq_class& x, long p) {
  if (p == 0) {
    if (x == 0) fail(Errc::BadArgument, "division by zero");
    mpq_class r = 1 / x;
    r.canonicalize();
    return r;
  }
  mpz_class num = x.get_num(), inv, mp(p);
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mp.get_mpz_t()) == 0)
    fail(Errc::BadArgument, "division by zero residue");
  return mpq_class(inv);
}

void tp_trim(TPoly& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

void tp_canon(TPoly& f, long p) {
  for (auto& x : f.c) x = fp_reduce(x, p);
  tp_trim(f);
}

TPoly tp_add(const TPoly& a, const TPoly& b, long p, int bsign) {
  TPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), mpq_class(0));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size()) r.c[i] += a.c[i];
    if (i < b.c.size()) r.c[i] += bsign < 0 ? -b.c[i] : b.c[i];
  }
  tp_canon(r, p);
  return r;
}

TPoly tp_mul(const TPoly& a, const TPoly& b, long p) {
  TPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.resize(a.c.size() + b.c.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  tp_canon(r, p);
  return r;
}

TPoly tp_neg(const TPoly& a, long p) {
  TPoly r = a;
  for (auto& x : r.c) x = -x;
  tp_canon(r, p);
  return r;
}

// division with remainder over the coefficient field
void tp_divrem(const TPoly& a, const TPoly& b, long p, TPoly& q, TPoly& r) {
  if (b.c.empty()) fail(Errc::BadArgument, "t-polynomial division by zero");
  r = a;
  q.c.assign(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 0, mpq_class(0));
  mpq_class lbinv = fp_inv(b.c.back(), p);
  while (r.c.size() >= b.c.size() && !r.c.empty()) {
    std::size_t shift = r.c.size() - b.c.size();
    mpq_class coef = fp_reduce(r.c.back() * lbinv, p);
    if (q.c.size() <= shift) q.c.resize(shift + 1, mpq_class(0));
    q.c[shift] += coef;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] -= coef * b.c[i];
    tp_canon(r, p);
    if (r.c.size() > shift + b.c.size() - 1) break;  // no progress; cannot happen
  }
  tp_canon(q, p);
}

bool tp_has_t1(const TPoly& f) { return f.c.size() > 1 && f.c[1] != 0; }

}  // namespace

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingSpec ring, Payload payload)
    : ring_(ring), payload_(std::move(payload)) {
  switch (ring_.kind()) {
    case RingKind::Integers:
      if (!std::holds_alternative<mpz_class>(payload_))
        fail(Errc::BadArgument, "ZZ element needs an integer payload");
      break;
    case RingKind::PrimeField: {
      if (!std::holds_alternative<mpz_class>(payload_))
        fail(Errc::BadArgument, "GF(p) element needs an integer payload");
      auto& v = std::get<mpz_class>(payload_);
      mpz_class mp(ring_.param());
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mp.get_mpz_t());
      break;
    }
    case RingKind::Rationals: {
      if (!std::holds_alternative<mpq_class>(payload_))
        fail(Errc::BadArgument, "QQ element needs a rational payload");
      std::get<mpq_class>(payload_).canonicalize();
      break;
    }
    case RingKind::PolyOverPrimeField:
    case RingKind::PolyOverRationals:
    case RingKind::MonomialSubring: {
      if (!std::holds_alternative<TPoly>(payload_))
        fail(Errc::BadArgument, "t-polynomial payload expected");
      auto& f = std::get<TPoly>(payload_);
      tp_canon(f, ring_.characteristic());
      if (ring_.kind() == RingKind::MonomialSubring && tp_has_t1(f))
        fail(Errc::BadArgument, "element has a t^1 term, outside K[t^2,t^3]");
      break;
    }
    case RingKind::QuadraticOrder:
      if (!std::holds_alternative<QuadElt>(payload_))
        fail(Errc::BadArgument, "quadratic-order element needs (u, v)");
      break;
  }
}

RingElement RingElement::zero(const RingSpec& ring) { return from_int(ring, 0); }
RingElement RingElement::one(const RingSpec& ring) { return from_int(ring, 1); }

RingElement RingElement::from_int(const RingSpec& ring, const mpz_class& n) {
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return RingElement(ring, n);
    case RingKind::Rationals:
      return RingElement(ring, mpq_class(n));
    case RingKind::QuadraticOrder:
      return RingElement(ring, QuadElt{n, 0});
    default: {
      TPoly f;
      f.c.push_back(mpq_class(n));
      return RingElement(ring, std::move(f));
    }
  }
}

RingElement RingElement::t_power(const RingSpec& ring, unsigned k) {
  if (!ring.is_tpoly()) fail(Errc::BadArgument, "t lives only in t-polynomial rings");
  TPoly f;
  f.c.assign(k + 1, mpq_class(0));
  f.c[k] = 1;
  return RingElement(ring, std::move(f));
}

RingElement RingElement::quad(const RingSpec& ring, mpz_class u, mpz_class v) {
  if (ring.kind() != RingKind::QuadraticOrder)
    fail(Errc::BadArgument, "quad element outside a quadratic order");
  return RingElement(ring, QuadElt{std::move(u), std::move(v)});
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpz_class>) return v == 0;
        else if constexpr (std::is_same_v<T, mpq_class>) return v == 0;
        else if constexpr (std::is_same_v<T, TPoly>) return v.c.empty();
        else return v.u == 0 && v.v == 0;
      },
      payload_);
}

bool RingElement::is_one() const { return *this == one(ring_); }

bool RingElement::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      return as_int() == 1 || as_int() == -1;
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return !is_zero();
    case RingKind::PolyOverPrimeField:
    case RingKind::PolyOverRationals:
    case RingKind::MonomialSubring:
      return as_tpoly().c.size() == 1;
    case RingKind::QuadraticOrder:
      // imaginary |d| > 1: units are exactly +-1
      return as_quad().v == 0 && (as_quad().u == 1 || as_quad().u == -1);
  }
  return false;
}

const mpz_class& RingElement::as_int() const { return std::get<mpz_class>(payload_); }
const mpq_class& RingElement::as_rat() const { return std::get<mpq_class>(payload_); }
const TPoly& RingElement::as_tpoly() const { return std::get<TPoly>(payload_); }
const QuadElt& RingElement::as_quad() const { return std::get<QuadElt>(payload_); }

mpq_class RingElement::t_coeff(std::size_t k) const {
  const auto& f = as_tpoly();
  return k < f.c.size() ? f.c[k] : mpq_class(0);
}

int RingElement::t_degree() const {
  return static_cast<int>(as_tpoly().c.size()) - 1;
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    fail(Errc::MixedRings,
         "operands from different rings: " + a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const RingSpec& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return RingElement(R, mpz_class(a.as_int() + b.as_int()));
    case RingKind::Rationals:
      return RingElement(R, mpq_class(a.as_rat() + b.as_rat()));
    case RingKind::QuadraticOrder:
      return RingElement(R, QuadElt{a.as_quad().u + b.as_quad().u,
                                    a.as_quad().v + b.as_quad().v});
    default:
      return RingElement(R, tp_add(a.as_tpoly(), b.as_tpoly(), R.characteristic(), +1));
  }
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const RingSpec& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return RingElement(R, mpz_class(a.as_int() - b.as_int()));
    case RingKind::Rationals:
      return RingElement(R, mpq_class(a.as_rat() - b.as_rat()));
    case RingKind::QuadraticOrder:
      return RingElement(R, QuadElt{a.as_quad().u - b.as_quad().u,
                                    a.as_quad().v - b.as_quad().v});
    default:
      return RingElement(R, tp_add(a.as_tpoly(), b.as_tpoly(), R.characteristic(), -1));
  }
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const RingSpec& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return RingElement(R, mpz_class(a.as_int() * b.as_int()));
    case RingKind::Rationals:
      return RingElement(R, mpq_class(a.as_rat() * b.as_rat()));
    case RingKind::QuadraticOrder: {
      const QuadElt& x = a.as_quad();
      const QuadElt& y = b.as_quad();
      mpz_class d(R.param());
      return RingElement(R, QuadElt{x.u * y.u + d * x.v * y.v,
                                    x.u * y.v + x.v * y.u});
    }
    default:
      return RingElement(R, tp_mul(a.as_tpoly(), b.as_tpoly(), R.characteristic()));
  }
}

RingElement ring_neg(const RingElement& a) {
  const RingSpec& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return RingElement(R, mpz_class(-a.as_int()));
    case RingKind::Rationals:
      return RingElement(R, mpq_class(-a.as_rat()));
    case RingKind::QuadraticOrder:
      return RingElement(R, QuadElt{-a.as_quad().u, -a.as_quad().v});
    default:
      return RingElement(R, tp_neg(a.as_tpoly(), R.characteristic()));
  }
}

RingElement ring_pow(const RingElement& a, unsigned n) {
  RingElement acc = RingElement::one(a.ring());
  RingElement base = a;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

std::optional<RingElement> try_divide(const RingElement& x, const RingElement& d) {
  require_same_ring(x, d);
  const RingSpec& R = x.ring();
  if (d.is_zero()) return std::nullopt;
  switch (R.kind()) {
    case RingKind::Integers: {
      if (!mpz_divisible_p(x.as_int().get_mpz_t(), d.as_int().get_mpz_t()))
        return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), x.as_int().get_mpz_t(), d.as_int().get_mpz_t());
      return RingElement(R, q);
    }
    case RingKind::PrimeField: {
      mpq_class q = fp_reduce(mpq_class(x.as_int()) * fp_inv(mpq_class(d.as_int()), R.param()),
                              R.param());
      return RingElement(R, q.get_num());
    }
    case RingKind::Rationals:
      return RingElement(R, mpq_class(x.as_rat() / d.as_rat()));
    case RingKind::QuadraticOrder: {
      const QuadElt& a = x.as_quad();
      const QuadElt& b = d.as_quad();
      mpz_class dd(R.param());
      mpz_class n = b.u * b.u - dd * b.v * b.v;  // norm, nonzero for d < 0
      mpz_class nu = a.u * b.u - dd * a.v * b.v;
      mpz_class nv = a.v * b.u - a.u * b.v;
      if (!mpz_divisible_p(nu.get_mpz_t(), n.get_mpz_t()) ||
          !mpz_divisible_p(nv.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
      mpz_class qu, qv;
      mpz_divexact(qu.get_mpz_t(), nu.get_mpz_t(), n.get_mpz_t());
      mpz_divexact(qv.get_mpz_t(), nv.get_mpz_t(), n.get_mpz_t());
      return RingElement(R, QuadElt{qu, qv});
    }
    default: {
      long p = R.characteristic();
      TPoly q, r;
      tp_divrem(x.as_tpoly(), d.as_tpoly(), p, q, r);
      if (!r.c.empty()) return std::nullopt;
      if (R.kind() == RingKind::MonomialSubring && tp_has_t1(q))
        return std::nullopt;  // quotient escapes the subring
      return RingElement(R, std::move(q));
    }
  }
  return std::nullopt;
}

std::optional<DivMod> euclid_divmod(const RingElement& x, const RingElement& d) {
  require_same_ring(x, d);
  const RingSpec& R = x.ring();
  if (d.is_zero()) return std::nullopt;
  switch (R.kind()) {
    case RingKind::Integers: {
      mpz_class q, r, dd = abs(d.as_int());
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.as_int().get_mpz_t(), dd.get_mpz_t());
      if (d.as_int() < 0) q = -q;
      return DivMod{RingElement(R, q), RingElement(R, r)};
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return DivMod{*try_divide(x, d), RingElement::zero(R)};
    case RingKind::PolyOverPrimeField:
    case RingKind::PolyOverRationals: {
      TPoly q, r;
      tp_divrem(x.as_tpoly(), d.as_tpoly(), R.characteristic(), q, r);
      return DivMod{RingElement(R, std::move(q)), RingElement(R, std::move(r))};
    }
    default:
      return std::nullopt;
  }
}

BezoutTriple gcd_bezout(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  const RingSpec& R = x.ring();
  switch (R.kind()) {
    case RingKind::Integers: {
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.as_int().get_mpz_t(),
                 y.as_int().get_mpz_t());
      return {RingElement(R, g), RingElement(R, s), RingElement(R, t)};
    }
    case RingKind::Rationals:
    case RingKind::PrimeField: {
      if (x.is_zero() && y.is_zero())
        return {RingElement::zero(R), RingElement::zero(R), RingElement::zero(R)};
      if (!x.is_zero())
        return {RingElement::one(R), *try_divide(RingElement::one(R), x),
                RingElement::zero(R)};
      return {RingElement::one(R), RingElement::zero(R),
              *try_divide(RingElement::one(R), y)};
    }
    case RingKind::PolyOverPrimeField:
    case RingKind::PolyOverRationals: {
      // extended Euclid, then monic normalization
      RingElement r0 = x, r1 = y;
      RingElement s0 = RingElement::one(R), s1 = RingElement::zero(R);
      RingElement t0 = RingElement::zero(R), t1 = RingElement::one(R);
      while (!r1.is_zero()) {
        auto dm = euclid_divmod(r0, r1);
        RingElement r2 = dm->r;
        RingElement s2 = s0 - dm->q * s1;
        RingElement t2 = t0 - dm->q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
      }
      if (r0.is_zero()) return {r0, s0, t0};
      long p = R.characteristic();
      mpq_class lc = r0.as_tpoly().c.back();
      TPoly unit;
      unit.c.push_back(fp_inv(lc, p));
      RingElement u(R, std::move(unit));
      return {r0 * u, s0 * u, t0 * u};
    }
    default:
      fail(Errc::NotBezout, R.name() + " is not a Bezout ring");
  }
}

RingElement mod_inverse(const RingElement& x, const RingElement& m) {
  auto tri = gcd_bezout(x, m);
  if (!tri.g.is_unit())
    fail(Errc::BadArgument, "element not invertible modulo " + to_string(m));
  // g = s*x + t*m with g a unit; inverse is s/g
  auto inv = try_divide(tri.s, tri.g);
  auto red = euclid_divmod(*inv, m);
  return red ? red->r : *inv;
}

NormalizationData normalization_of(const RingSpec& monomial_ring) {
  if (monomial_ring.kind() != RingKind::MonomialSubring)
    fail(Errc::BadArgument, "normalization data only for K[t^2,t^3]");
  long p = monomial_ring.param();
  return {monomial_ring,
          p ? RingSpec::poly_over_prime_field(p) : RingSpec::poly_over_rationals()};
}

bool subring_member(const RingElement& e, const NormalizationData& nd) {
  if (e.ring() != nd.target)
    fail(Errc::BadArgument, "subring_member expects an element of the normalization");
  return !tp_has_t1(e.as_tpoly());
}

RingElement embed(const NormalizationData& nd, const RingElement& e) {
  if (e.ring() != nd.source) fail(Errc::MixedRings, "embed expects a subring element");
  return RingElement(nd.target, e.as_tpoly());
}

std::optional<RingElement> lift(const NormalizationData& nd, const RingElement& e) {
  if (e.ring() != nd.target) fail(Errc::MixedRings, "lift expects a normalization element");
  if (tp_has_t1(e.as_tpoly())) return std::nullopt;
  return RingElement(nd.source, e.as_tpoly());
}

bool can_embed_into(const RingSpec& from, const RingSpec& into) {
  if (from == into) return true;
  if (from.kind() == RingKind::MonomialSubring) {
    auto nd = normalization_of(from);
    return nd.target == into;
  }
  if (from.kind() == RingKind::Integers && into.kind() == RingKind::Rationals)
    return true;
  return false;
}

RingElement embed_into(const RingElement& e, const RingSpec& target) {
  if (e.ring() == target) return e;
  if (e.ring().kind() == RingKind::MonomialSubring)
    return embed(normalization_of(e.ring()), e);
  if (e.ring().kind() == RingKind::Integers && target.kind() == RingKind::Rationals)
    return RingElement(target, mpq_class(e.as_int()));
  fail(Errc::MixedRings, "no embedding " + e.ring().name() + " -> " + target.name());
}

std::string rat_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// descending powers of t; empty polynomial prints "0"
std::string tpoly_string(const TPoly& f) {
  if (f.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.c.size(); i-- > 0;) {
    const mpq_class& q = f.c[i];
    if (q == 0) continue;
    mpq_class mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
      first = false;
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    bool unit_coeff = (mag == 1);
    if (i == 0) {
      os << rat_string(mag);
    } else {
      if (!unit_coeff) os << rat_string(mag) << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const RingElement& e) {
  switch (e.ring().kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return e.as_int().get_str();
    case RingKind::Rationals:
      return rat_string(e.as_rat());
    case RingKind::QuadraticOrder: {
      const QuadElt& q = e.as_quad();
      std::string root = "sqrt(" + std::to_string(e.ring().param()) + ")";
      if (q.v == 0) return q.u.get_str();
      mpz_class vmag = abs(q.v);
      std::string vpart =
          (vmag == 1) ? root : vmag.get_str() + "*" + root;
      if (q.u == 0) return (q.v < 0 ? "-" : "") + vpart;
      return q.u.get_str() + (q.v < 0 ? " - " : " + ") + vpart;
    }
    default:
      return tpoly_string(e.as_tpoly());
  }
}

}  // namespace stci
