#include "stci/poly.hpp"

#include <algorithm>
#include <sstream>

namespace stci {

UniPoly::UniPoly(RingSpec ring, std::vector<RingElement> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.ring() != ring_) fail(Errc::MixedRings, "coefficient from a different ring");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(RingElement c) {
  UniPoly f(c.ring());
  if (!c.is_zero()) f.coeffs_.push_back(std::move(c));
  return f;
}

UniPoly UniPoly::x(const RingSpec& ring) {
  return monomial(RingElement::one(ring), 1);
}

UniPoly UniPoly::monomial(RingElement c, unsigned k) {
  UniPoly f(c.ring());
  if (c.is_zero()) return f;
  f.coeffs_.assign(k, RingElement::zero(c.ring()));
  f.coeffs_.push_back(std::move(c));
  return f;
}

RingElement UniPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : RingElement::zero(ring_);
}

const RingElement& UniPoly::leading() const {
  if (coeffs_.empty()) fail(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool UniPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back().is_one();
}

namespace {

void require_same_ring(const UniPoly& a, const UniPoly& b) {
  if (a.ring() != b.ring())
    fail(Errc::MixedRings,
         "polynomials over different rings: " + a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

UniPoly poly_add(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  std::vector<RingElement> c;
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return UniPoly(a.ring(), std::move(c));
}

UniPoly poly_sub(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  std::vector<RingElement> c;
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
  return UniPoly(a.ring(), std::move(c));
}

UniPoly poly_neg(const UniPoly& a) {
  std::vector<RingElement> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(-x);
  return UniPoly(a.ring(), std::move(c));
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.ring());
  std::vector<RingElement> c(a.coeffs().size() + b.coeffs().size() - 1,
                             RingElement::zero(a.ring()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
  return UniPoly(a.ring(), std::move(c));
}

UniPoly poly_pow(const UniPoly& a, unsigned n) {
  UniPoly acc = UniPoly::constant(RingElement::one(a.ring()));
  UniPoly base = a;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

UniPoly poly_scale(const RingElement& c, const UniPoly& a) {
  std::vector<RingElement> r;
  r.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) r.push_back(c * x);
  return UniPoly(a.ring(), std::move(r));
}

std::optional<UniPoly> try_div_exact(const UniPoly& num, const UniPoly& den) {
  require_same_ring(num, den);
  if (den.is_zero()) return std::nullopt;
  UniPoly r = num;
  std::vector<RingElement> q(
      num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0,
      RingElement::zero(num.ring()));
  while (!r.is_zero() && r.degree() >= den.degree()) {
    auto c = try_divide(r.leading(), den.leading());
    if (!c) return std::nullopt;
    unsigned shift = static_cast<unsigned>(r.degree() - den.degree());
    q[shift] = *c;
    r = r - poly_mul(UniPoly::monomial(*c, shift), den);
  }
  if (!r.is_zero()) return std::nullopt;
  return UniPoly(num.ring(), std::move(q));
}

PolyDivRem divrem_monic(const UniPoly& num, const UniPoly& den) {
  require_same_ring(num, den);
  if (!den.is_monic()) fail(Errc::BadArgument, "divrem_monic needs a monic divisor");
  UniPoly q = UniPoly::zero(num.ring());
  UniPoly r = num;
  while (!r.is_zero() && r.degree() >= den.degree()) {
    unsigned shift = static_cast<unsigned>(r.degree() - den.degree());
    UniPoly term = UniPoly::monomial(r.leading(), shift);
    q = q + term;
    r = r - poly_mul(term, den);
  }
  return {q, r};
}

ContentIdeal content(const UniPoly& f) {
  ContentIdeal ci{f.ring(), f.coeffs(), std::nullopt, {}};
  if (f.is_zero()) {
    ci.principal = RingElement::zero(f.ring());
    return ci;
  }
  if (!f.ring().is_bezout()) return ci;  // generator list only
  RingElement g = f.coeffs()[0];
  std::vector<RingElement> d{RingElement::one(f.ring())};
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    auto tri = gcd_bezout(g, f.coeffs()[i]);
    for (auto& w : d) w = w * tri.s;
    d.push_back(tri.t);
    g = tri.g;
  }
  ci.principal = g;
  ci.witness = std::move(d);
  return ci;
}

PrimitivePart primitive_part(const UniPoly& g) {
  if (!g.ring().is_bezout())
    fail(Errc::NotBezout, "primitive part needs a Bezout coefficient ring");
  if (g.is_zero()) fail(Errc::ZeroPolynomial, "primitive part of the zero polynomial");
  ContentIdeal ci = content(g);
  RingElement a = *ci.principal;
  std::vector<RingElement> prim;
  prim.reserve(g.coeffs().size());
  for (const auto& b : g.coeffs()) {
    auto c = try_divide(b, a);
    if (!c) fail(Errc::BadArgument, "content does not divide a coefficient");
    prim.push_back(*c);
  }
  PrimitivePart pp{a, UniPoly(g.ring(), prim), prim, ci.witness};
  // 1 = sum c_i d_i must hold exactly
  RingElement s = RingElement::zero(g.ring());
  for (std::size_t i = 0; i < prim.size(); ++i) s = s + prim[i] * ci.witness[i];
  if (!s.is_one())
    fail(Errc::BadArgument, "cofactor identity failed; broken gcd witnesses");
  return pp;
}

EvalHom make_eval_hom(const RingSpec& source_coeff, RingElement image_of_x) {
  if (!can_embed_into(source_coeff, image_of_x.ring()))
    fail(Errc::BadArgument, "no coefficient embedding " + source_coeff.name() +
                                " -> " + image_of_x.ring().name());
  return {source_coeff, image_of_x.ring(), std::move(image_of_x)};
}

RingElement eval(const EvalHom& h, const UniPoly& f) {
  if (f.ring() != h.source_coeff)
    fail(Errc::MixedRings, "polynomial is not over the homomorphism's source ring");
  RingElement acc = RingElement::zero(h.target);
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * h.image_of_x + embed_into(f.coeffs()[i], h.target);
  return acc;
}

std::string to_string(const UniPoly& f, const char* var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const RingElement& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool negated = false;
    if (!cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos) {
      // single negative term: fold the sign into the separator
      negated = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (negated) os << "-";
      first = false;
    } else {
      os << (negated ? " - " : " + ");
    }
    bool composite = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    if (i == 0) {
      os << (composite ? "(" + cs + ")" : cs);
    } else {
      if (cs != "1") {
        os << (composite ? "(" + cs + ")" : cs) << "*";
      }
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace stci
