#include "stci/parse.hpp"

#include <cctype>

namespace stci {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail(Errc::SyntaxError,
           std::string("expected '") + c + "' at byte " + std::to_string(pos), pos);
  }
  bool accept_word(const char* w) {
    skip_ws();
    std::size_t n = std::string(w).size();
    if (s.compare(pos, n, w) == 0) {
      // words must not run into following identifier characters
      if (pos + n < s.size() && std::isalnum(static_cast<unsigned char>(s[pos + n])))
        return false;
      pos += n;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      fail(Errc::SyntaxError, "expected an integer at byte " + std::to_string(pos), pos);
    return mpz_class(s.substr(start, pos - start));
  }
};

// Expressions are evaluated over a cover ring (the normalization for a
// monomial subring) and lifted into the requested ring afterwards.
struct ExprEval {
  Lexer& lx;
  const RingSpec& cover;
  const Config& cfg;
  std::string var;  // the polynomial variable accepted here

  UniPoly expr() {
    UniPoly acc = term();
    while (true) {
      if (lx.accept('+')) acc = acc + term();
      else if (lx.accept('-')) acc = acc - term();
      else return acc;
    }
  }

  UniPoly term() {
    UniPoly acc = unary();
    while (lx.accept('*')) acc = poly_mul(acc, unary());
    return acc;
  }

  UniPoly unary() {
    if (lx.accept('-')) return poly_neg(unary());
    return power();
  }

  UniPoly power() {
    UniPoly base = atom();
    if (lx.accept('^')) {
      std::size_t at = lx.pos;
      mpz_class e = lx.integer();
      if (e < 0 || e > cfg.max_input_degree)
        fail(Errc::SyntaxError,
             "exponent out of range at byte " + std::to_string(at), at);
      base = poly_pow(base, static_cast<unsigned>(e.get_ui()));
      check_degree(base, at);
    }
    return base;
  }

  UniPoly atom() {
    lx.skip_ws();
    std::size_t at = lx.pos;
    if (lx.accept('(')) {
      UniPoly inner = expr();
      lx.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(lx.peek())))
      return UniPoly::constant(RingElement::from_int(cover, lx.integer()));
    if (lx.accept_word("sqrt")) {
      lx.expect('(');
      bool neg = lx.accept('-');
      mpz_class d = lx.integer();
      lx.expect(')');
      long dv = (neg ? -1 : 1) * d.get_si();
      if (cover.kind() != RingKind::QuadraticOrder || cover.param() != dv)
        fail(Errc::SyntaxError,
             "sqrt(" + std::to_string(dv) + ") does not live in " + cover.name(),
             at);
      return UniPoly::constant(RingElement::quad(cover, 0, 1));
    }
    if (lx.accept_word("t")) {
      if (!cover.is_tpoly())
        fail(Errc::SyntaxError, "t does not live in " + cover.name(), at);
      return UniPoly::constant(RingElement::t_power(cover, 1));
    }
    if (lx.accept_word("X") || lx.accept_word("Z")) {
      std::string seen = lx.s.substr(at, 1);
      if (seen != var) {
        if (var == "\x01")
          fail(Errc::SyntaxError, "no variable allowed in this context", at);
        fail(Errc::SyntaxError,
             "variable " + seen + " not allowed here (expected " + var + ")", at);
      }
      return UniPoly::x(cover);
    }
    fail(Errc::SyntaxError, "unexpected input at byte " + std::to_string(at), at);
  }

  void check_degree(const UniPoly& f, std::size_t at) {
    if (f.degree() > static_cast<int>(cfg.max_input_degree))
      fail(Errc::SyntaxError, "degree exceeds the input cap", at);
  }
};

RingSpec cover_ring(const RingSpec& ring) {
  if (ring.kind() == RingKind::MonomialSubring) return normalization_of(ring).target;
  return ring;
}

UniPoly lift_poly(const UniPoly& f, const RingSpec& ring) {
  if (f.ring() == ring) return f;
  NormalizationData nd = normalization_of(ring);
  std::vector<RingElement> cs;
  for (const auto& c : f.coeffs()) {
    auto lc = lift(nd, c);
    if (!lc)
      fail(Errc::BadArgument,
           "coefficient " + to_string(c) + " lies outside " + ring.name());
    cs.push_back(*lc);
  }
  return UniPoly(ring, std::move(cs));
}

UniPoly parse_poly_tail(Lexer& lx, const RingSpec& ring, const Config& cfg,
                        const char* var) {
  RingSpec cover = cover_ring(ring);
  ExprEval ev{lx, cover, cfg, var};
  UniPoly f = ev.expr();
  ev.check_degree(f, lx.pos);
  return lift_poly(f, ring);
}

}  // namespace

RingSpec parse_ring(const std::string& s) {
  Lexer lx{s};
  RingSpec out = RingSpec::integers();
  if (lx.accept_word("ZZ")) {
    if (lx.accept('[')) {
      if (!lx.accept_word("sqrt")) fail(Errc::UnknownRing, "unknown ring: " + s);
      lx.expect('(');
      bool neg = lx.accept('-');
      mpz_class d = lx.integer();
      lx.expect(')');
      lx.expect(']');
      out = RingSpec::quadratic_order((neg ? -1 : 1) * d.get_si());
    } else {
      out = RingSpec::integers();
    }
  } else if (lx.accept_word("QQ")) {
    if (lx.accept('[')) {
      if (!lx.accept_word("t")) fail(Errc::UnknownRing, "unknown ring: " + s);
      lx.expect('^');
      if (lx.integer() != 2) fail(Errc::UnknownRing, "unknown ring: " + s);
      lx.expect(',');
      if (!lx.accept_word("t")) fail(Errc::UnknownRing, "unknown ring: " + s);
      lx.expect('^');
      if (lx.integer() != 3) fail(Errc::UnknownRing, "unknown ring: " + s);
      lx.expect(']');
      out = RingSpec::monomial_subring(0);
    } else {
      out = RingSpec::rationals();
    }
  } else if (lx.accept_word("GF")) {
    lx.expect('(');
    mpz_class p = lx.integer();
    lx.expect(')');
    long pv = p.get_si();
    if (lx.accept('[')) {
      if (!lx.accept_word("t")) fail(Errc::UnknownRing, "unknown ring: " + s);
      if (lx.accept('^')) {
        if (lx.integer() != 2) fail(Errc::UnknownRing, "unknown ring: " + s);
        lx.expect(',');
        if (!lx.accept_word("t")) fail(Errc::UnknownRing, "unknown ring: " + s);
        lx.expect('^');
        if (lx.integer() != 3) fail(Errc::UnknownRing, "unknown ring: " + s);
        lx.expect(']');
        out = RingSpec::monomial_subring(pv);
      } else {
        lx.expect(']');
        out = RingSpec::poly_over_prime_field(pv);
      }
    } else {
      out = RingSpec::prime_field(pv);
    }
  } else {
    fail(Errc::UnknownRing, "unknown ring: " + s);
  }
  if (!lx.eof())
    fail(Errc::SyntaxError, "trailing input at byte " + std::to_string(lx.pos), lx.pos);
  return out;
}

UniPoly parse_poly(const std::string& s, const RingSpec& ring, const Config& cfg,
                   const char* var) {
  Lexer lx{s};
  UniPoly f = parse_poly_tail(lx, ring, cfg, var);
  if (!lx.eof())
    fail(Errc::SyntaxError, "trailing input at byte " + std::to_string(lx.pos), lx.pos);
  return f;
}

RingElement parse_element(const std::string& s, const RingSpec& ring,
                          const Config& cfg) {
  Lexer lx{s};
  RingSpec cover = cover_ring(ring);
  ExprEval ev{lx, cover, cfg, "\x01"};  // no variable admitted
  UniPoly f = ev.expr();
  if (!lx.eof())
    fail(Errc::SyntaxError, "trailing input at byte " + std::to_string(lx.pos), lx.pos);
  if (!f.is_constant()) fail(Errc::SyntaxError, "expected a constant expression");
  RingElement c = f.is_zero() ? RingElement::zero(cover) : f.coeff(0);
  if (cover == ring) return c;
  auto lifted = lift(normalization_of(ring), c);
  if (!lifted)
    fail(Errc::BadArgument, to_string(c) + " lies outside " + ring.name());
  return *lifted;
}

ParsedIdeal parse_ideal(const std::string& s, const RingSpec& ring,
                        const Config& cfg) {
  Lexer lx{s};
  if (lx.accept_word("ker")) {
    lx.expect('(');
    if (!lx.accept_word("X"))
      fail(Errc::SyntaxError, "kernel spec is ker(X -> image)", lx.pos);
    lx.expect('-');
    lx.expect('>');
    RingSpec cover = cover_ring(ring);
    ExprEval ev{lx, cover, cfg, "\x01"};
    UniPoly img = ev.expr();
    lx.expect(')');
    if (!lx.eof())
      fail(Errc::SyntaxError, "trailing input at byte " + std::to_string(lx.pos), lx.pos);
    if (!img.is_constant())
      fail(Errc::SyntaxError, "kernel image must be a coefficient expression");
    RingElement image = img.is_zero() ? RingElement::zero(cover) : img.coeff(0);
    return ParsedIdeal{ParsedIdeal::Kind::Kernel,
                       IdealPresentation{ring, true, {}}, image,
                       QuadIdeal::zero(-5)};
  }
  if (lx.accept_word("qideal")) {
    if (ring.kind() != RingKind::QuadraticOrder)
      fail(Errc::BadArgument, "qideal(...) needs a quadratic-order ring");
    lx.expect('(');
    std::vector<QuadElt> gens;
    do {
      ExprEval ev{lx, ring, cfg, "\x01"};
      UniPoly g = ev.expr();
      if (!g.is_constant())
        fail(Errc::SyntaxError, "qideal generators are ring elements");
      RingElement e = g.is_zero() ? RingElement::zero(ring) : g.coeff(0);
      gens.push_back(e.as_quad());
    } while (lx.accept(';'));
    lx.expect(')');
    if (!lx.eof())
      fail(Errc::SyntaxError, "trailing input at byte " + std::to_string(lx.pos), lx.pos);
    return ParsedIdeal{ParsedIdeal::Kind::Quad, IdealPresentation{ring, false, {}},
                       RingElement::zero(ring),
                       QuadIdeal::from_generators(ring.param(), gens)};
  }
  if (lx.accept_word("ideal")) {
    lx.expect('(');
    std::vector<UniPoly> gens;
    do {
      gens.push_back(parse_poly_tail(lx, ring, cfg, "X"));
    } while (lx.accept(';'));
    lx.expect(')');
    if (!lx.eof())
      fail(Errc::SyntaxError, "trailing input at byte " + std::to_string(lx.pos), lx.pos);
    return ParsedIdeal{ParsedIdeal::Kind::Generators,
                       IdealPresentation{ring, true, std::move(gens)},
                       RingElement::zero(cover_ring(ring)), QuadIdeal::zero(-5)};
  }
  fail(Errc::SyntaxError, "ideal spec must be ideal(...), ker(...) or qideal(...)",
       lx.pos);
}

PrimeIdeal classify_parsed(const ParsedIdeal& pi, const RingSpec& ring,
                           const Config& cfg) {
  switch (pi.kind) {
    case ParsedIdeal::Kind::Generators:
      return classify(pi.pres, cfg);
    case ParsedIdeal::Kind::Kernel:
      return classify_kernel(ring, pi.kernel_image);
    case ParsedIdeal::Kind::Quad:
      return classify_quad(pi.quad);
  }
  fail(Errc::BadArgument, "unreachable ideal kind");
}

}  // namespace stci
