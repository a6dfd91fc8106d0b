#include "stci/certify.hpp"

#include <algorithm>
#include <sstream>

namespace stci {

namespace {

std::string witness_identity_detail(const PrimitivePart& pp) {
  std::ostringstream os;
  os << "content " << to_string(pp.content) << "; cofactor identity 1 =";
  bool first = true;
  for (std::size_t i = 0; i < pp.cofactors.size(); ++i) {
    if (pp.witness[i].is_zero() || pp.cofactors[i].is_zero()) continue;
    os << (first ? " " : " + ") << "(" << to_string(pp.cofactors[i]) << ")*("
       << to_string(pp.witness[i]) << ")";
    first = false;
  }
  return os.str();
}

// canonical associate of the base prime via the pair-selection route: x, y in
// the prime with gcd(x, y) generating it
struct BaseGenerator {
  RingElement g;
  TraceStep step;
};
BaseGenerator select_base_generator(const RingElement& a) {
  RingElement x = a * a;
  RingElement y = a;
  BezoutTriple tri = gcd_bezout(x, y);
  std::ostringstream os;
  os << "picked x = " << to_string(x) << " and y = " << to_string(y)
     << " in the base prime; gcd gives the generator " << to_string(tri.g)
     << " with witness " << to_string(tri.g) << " = (" << to_string(tri.s)
     << ")*(" << to_string(x) << ") + (" << to_string(tri.t) << ")*("
     << to_string(y) << ")";
  return {tri.g, {"base-generator-gcd", os.str()}};
}

}  // namespace

Certificate seal_certificate(Certificate cert, const Config& cfg) {
  if (cert.generators.size() != cert.target.height())
    fail(Errc::BadArgument,
         "generator count " + std::to_string(cert.generators.size()) +
             " does not match target height " + std::to_string(cert.target.height()));
  cert.verification =
      rad_equal_check(cert.target, cert.generators, cert.exponent_hints, cfg);
  return cert;
}

Certificate certify_prime(const PrimeIdeal& p, const Config& cfg) {
  if (!p.in_poly_ring())
    fail(Errc::UnsupportedIdealShape, "certification targets primes of R[X]");
  const RingSpec& R = p.base();

  if (R.kind() == RingKind::MonomialSubring) {
    if (p.get_if<KernelShape>()) {
      if (R.characteristic() == 0)
        fail(Errc::CharacteristicZero,
             "characteristic zero: no p-th power descent over " + R.name() +
                 "; build the normality obstruction instead");
      return frobenius_descent(p, cfg);
    }
    fail(Errc::UnsupportedIdealShape,
         "monomial-subring primes are certified through their evaluation kernel");
  }

  if (!R.is_bezout() || R.krull_dim() != 1)
    fail(Errc::UnsupportedIdealShape,
         "certification needs a one-dimensional Bezout coefficient ring, got " +
             R.name());

  if (p.get_if<ZeroShape>()) {
    Certificate cert{p, {}, {}, {{"zero-ideal", "height zero: empty certificate"}}, 0, {}};
    return seal_certificate(std::move(cert), cfg);
  }
  if (const auto* cz = p.get_if<ContractionZero>()) {
    return certify_contraction_zero(p, cz->f, cfg);
  }
  if (const auto* ks = p.get_if<KernelShape>()) {
    // over the base ring itself the kernel is generated by X - image
    if (ks->h.image_of_x.ring() != R)
      fail(Errc::UnsupportedIdealShape,
           "kernel image lies outside the coefficient ring");
    UniPoly g = poly_sub(UniPoly::x(R), UniPoly::constant(ks->h.image_of_x));
    return certify_contraction_zero(p, g, cfg);
  }
  if (const auto* eb = p.get_if<ExtendedBase>()) {
    BaseGenerator bg = select_base_generator(eb->a);
    Certificate cert{p,
                     {UniPoly::constant(bg.g)},
                     {1},
                     {bg.step,
                      {"extended-base",
                       "the base prime extends to a height-one prime of R[X]; "
                       "its generator is the certificate"}},
                     0,
                     {}};
    return seal_certificate(std::move(cert), cfg);
  }
  if (const auto* mp = p.get_if<MaximalPair>()) {
    BaseGenerator bg = select_base_generator(mp->a);
    Certificate cert{p,
                     {UniPoly::constant(bg.g), mp->f},
                     {1, 1},
                     {bg.step,
                      {"maximal-pair",
                       "height two: the base generator together with the monic "
                       "polynomial generates the target up to radical"}},
                     0,
                     {}};
    return seal_certificate(std::move(cert), cfg);
  }
  fail(Errc::UnsupportedIdealShape, "no certification route for " + p.shape_name());
}

Certificate certify_contraction_zero(const PrimeIdeal& p, const UniPoly& g,
                                     const Config& cfg) {
  const RingSpec& R = p.base();
  if (g.is_zero()) fail(Errc::ZeroPolynomial, "presentation by the zero polynomial");
  if (g.ring() != R) fail(Errc::MixedRings, "presentation over a different ring");
  if (!R.is_bezout()) fail(Errc::NotBezout, "contraction-zero route needs Bezout coefficients");

  UniPoly target_gen = UniPoly::zero(R);
  if (const auto* cz = p.get_if<ContractionZero>()) {
    target_gen = cz->f;
  } else if (const auto* ks = p.get_if<KernelShape>()) {
    if (ks->h.image_of_x.ring() != R)
      fail(Errc::UnsupportedIdealShape, "kernel image lies outside the coefficient ring");
    target_gen = poly_sub(UniPoly::x(R), UniPoly::constant(ks->h.image_of_x));
  } else {
    fail(Errc::UnsupportedIdealShape,
         "target does not contract to zero: " + p.shape_name());
  }

  if (!member(g, p))
    fail(Errc::NotInIdeal, to_string(g) + " is not a member of " + p.describe());

  Certificate cert{p, {}, {}, {}, 0, {}};
  PrimitivePart pp = primitive_part(g);
  cert.trace.push_back({"primitive-part",
                        "g = (" + to_string(pp.content) + ") * (" +
                            to_string(pp.primitive) + "); " +
                            witness_identity_detail(pp)});

  // peel the target's generator out of the primitive part; everything else
  // lies outside the prime and is discarded
  UniPoly rest = pp.primitive;
  unsigned multiplicity = 0;
  while (true) {
    auto q = try_div_exact(rest, target_gen);
    if (!q) break;
    rest = *q;
    ++multiplicity;
  }
  if (multiplicity == 0)
    fail(Errc::NotInIdeal, "primitive part carries no factor from the target");
  if (!rest.is_constant() || !rest.coeff(0).is_unit()) {
    cert.trace.push_back({"discard-cofactor",
                          "factor (" + to_string(rest) +
                              ") lies outside the target and was discarded"});
  }
  cert.trace.push_back(
      {"unique-height-one",
       "a primitive polynomial avoids every extended base prime, so the target "
       "is the only height-one prime of R[X] containing the generator"});

  cert.generators = {target_gen};
  cert.exponent_hints = {1};
  return seal_certificate(std::move(cert), cfg);
}

Certificate frobenius_descent(const PrimeIdeal& p, const Config& cfg) {
  const RingSpec& R = p.base();
  if (R.kind() != RingKind::MonomialSubring)
    fail(Errc::UnsupportedIdealShape, "descent starts from a monomial subring");
  long ch = R.characteristic();
  if (ch == 0)
    fail(Errc::CharacteristicZero,
         "characteristic zero: no p-th power descent; build the normality "
         "obstruction instead");
  const auto* ks = p.get_if<KernelShape>();
  if (!ks)
    fail(Errc::UnsupportedIdealShape, "descent certifies evaluation kernels");

  NormalizationData nd = normalization_of(R);
  const RingElement& a = ks->h.image_of_x;
  if (a.ring() != nd.target)
    fail(Errc::BadArgument, "kernel image must live in the normalization");

  Certificate cert{p, {}, {}, {}, 0, {}};

  if (auto ar = lift(nd, a)) {
    // image already in the ring: X - a works with no power
    UniPoly f = poly_sub(UniPoly::x(R), UniPoly::constant(*ar));
    cert.trace.push_back({"kernel-generator",
                          "image " + to_string(a) +
                              " lies in the ring; the kernel is generated by " +
                              to_string(f)});
    cert.generators = {f};
    cert.exponent_hints = {1};
    return seal_certificate(std::move(cert), cfg);
  }

  // work over the normalization S = K[t]: there the kernel is (X - a)
  UniPoly fS = poly_sub(UniPoly::x(nd.target), UniPoly::constant(a));
  cert.trace.push_back(
      {"normalization-lift",
       "over the normalization S = " + nd.target.name() +
           " the extended kernel is principal up to radical, generated by " +
           to_string(fS)});

  UniPoly fSp = poly_pow(fS, static_cast<unsigned>(ch));
  std::vector<RingElement> lifted;
  for (const auto& c : fSp.coeffs()) {
    auto lc = lift(nd, c);
    if (!lc)
      fail(Errc::SubringEscape,
           "coefficient " + to_string(c) + " of the p-th power escapes the ring");
    lifted.push_back(*lc);
  }
  UniPoly fR(R, std::move(lifted));
  cert.trace.push_back(
      {"frobenius-power",
       "raising to the characteristic sends normalization elements into the "
       "ring; certificate generator " + to_string(fR)});
  cert.trace.push_back({"subring-check",
                        "all coefficients verified t^1-free, so the generator "
                        "lies in " + R.name() + "[X]"});

  cert.generators = {fR};
  cert.exponent_hints = {static_cast<unsigned>(ch)};
  return seal_certificate(std::move(cert), cfg);
}

ObstructionReport normality_obstruction(const RingSpec& ring, const RingElement& a,
                                        const Config& cfg) {
  if (ring.kind() != RingKind::MonomialSubring)
    fail(Errc::BadArgument, "the obstruction lives over K[t^2,t^3]");
  if (ring.characteristic() != 0)
    fail(Errc::BadArgument, "characteristic p: use certify (Frobenius path)");
  NormalizationData nd = normalization_of(ring);
  if (a.ring() != nd.target)
    fail(Errc::BadArgument, "adjoined element must live in the normalization " +
                                nd.target.name());
  if (subring_member(a, nd))
    fail(Errc::ElementActuallyInRing,
         to_string(a) + " already lies in " + ring.name() + "; no obstruction");

  // monic integral relation: with r the t^1-free part of a and c the t^1
  // coefficient, (X - r)^2 - c^2 t^2 vanishes at a and has coefficients in
  // the ring
  mpq_class c1 = a.t_coeff(1);
  RingElement t1 = RingElement::t_power(nd.target, 1);
  RingElement c1e(nd.target, TPoly{{c1}});
  RingElement r = a - c1e * t1;
  RingElement rlift = *lift(nd, r);
  RingElement c2t2 = *lift(nd, c1e * c1e * t1 * t1);
  UniPoly xr = poly_sub(UniPoly::x(ring), UniPoly::constant(rlift));
  UniPoly monic_witness = poly_sub(poly_mul(xr, xr), UniPoly::constant(c2t2));

  ObstructionReport rep{ring, a, "f = (X - a)^n, monic", monic_witness, 0, {}, "", {}};

  rep.trace.push_back(
      {"forced-form",
       "any single f with rad(f) = ker(X -> " + to_string(a) +
           ") generates the kernel's extension to the fraction-field "
           "polynomial ring, which is (X - a); hence f = c*(X - a)^n"});
  rep.trace.push_back(
      {"monic-forcing",
       "the kernel contains the monic polynomial " + to_string(rep.monic_witness) +
           ", which forces f monic and c = 1"});
  rep.trace.push_back(
      {"coefficient-extraction",
       "the X^(n-1) coefficient of (X - a)^n is -n*a, so a generator in R[X] "
       "would put -n*a inside the ring"});
  rep.trace.push_back(
      {"characteristic-zero-divisibility",
       "n is invertible in a ring containing the rationals, so n*a in R would "
       "force a in R; the check below is exhaustive for n up to the bound and "
       "the identity holds for every n"});

  rep.n_checked = cfg.n_check;
  for (unsigned n = 1; n <= cfg.n_check; ++n) {
    RingElement na = RingElement::from_int(nd.target, static_cast<long>(n)) * a;
    RingElement failing = -na;
    if (subring_member(failing, nd))
      fail(Errc::ElementActuallyInRing,
           "-" + std::to_string(n) + "*a unexpectedly lies in the ring");
    rep.failing.push_back(failing);
  }
  rep.conclusion =
      "no principal radical generator exists in " + ring.name() +
      "[X] for the kernel; the ring fails to be integrally closed at " +
      to_string(a);
  return rep;
}

ConstantDescentResult constant_descent(const UniPoly& f, const PrimeIdeal& p,
                                       const RingElement& a, const Config& cfg) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "claimed generator is zero");
  if (!member(a, p)) fail(Errc::NotInIdeal, to_string(a) + " is not in " + p.describe());

  ConstantDescentResult res{RingElement::zero(a.ring()), 0, RingElement::one(a.ring()), {}, {}};

  if (f.degree() >= 1) {
    // a^n = f*g forces deg f = 0 by comparing degrees; nonconstant f never
    // divides a nonzero constant
    fail(Errc::DegreeObstruction,
         "powers of " + to_string(a) + " are constants, but deg f = " +
             std::to_string(f.degree()) +
             " > 0; no power lands in (f), refuting rad(f) = P");
  }
  RingElement b = f.coeff(0);
  res.b = b;
  res.trace.push_back({"degree-comparison",
                       "a^n = f*g in a domain forces f constant; f = " + to_string(b)});

  if (!member(b, p))
    fail(Errc::NotRadicalEqual, "constant " + to_string(b) + " is not in the target prime");

  bool found = false;
  RingElement pw = RingElement::one(a.ring());
  for (unsigned n = 1; n <= cfg.descent_bound; ++n) {
    pw = pw * a;
    if (auto g = try_divide(pw, b)) {
      res.n = n;
      res.cofactor = *g;
      found = true;
      break;
    }
  }
  if (!found)
    fail(Errc::NotProvenAtBound,
         "no power of " + to_string(a) + " within bound " +
             std::to_string(cfg.descent_bound) + " lies in (" + to_string(b) + ")");
  res.trace.push_back({"power-search",
                       "a^" + std::to_string(res.n) + " = (" + to_string(b) +
                           ") * (" + to_string(res.cofactor) + ")"});

  // consistency of rad(b) = P
  if (const auto* qp = p.get_if<QuadPrimeShape>()) {
    TorsionWitness tw = torsion_witness(qp->q, cfg);
    res.torsion = tw;
    QuadIdeal principal_b = QuadIdeal::principal(qp->q.d(), b.as_quad());
    QuadIdeal pk = QuadIdeal::whole(qp->q.d());
    bool matched = false;
    for (unsigned k = 1; k <= cfg.descent_bound; ++k) {
      pk = quad_mul(pk, qp->q);
      if (pk == principal_b) {
        res.trace.push_back({"torsion-consistency",
                             "(b) equals the target prime to the power " +
                                 std::to_string(k) + "; least principal power is " +
                                 std::to_string(tw.m) + " with generator " +
                                 to_string_quad(qp->q.d(), tw.b)});
        matched = true;
        break;
      }
      if (pk.norm() > principal_b.norm()) break;  // norms grow: decisive
    }
    if (!matched)
      fail(Errc::NotRadicalEqual,
           "(b) is not a power of the target prime; rad(b) differs from P");
  } else if (const auto* eb = p.get_if<ExtendedBase>()) {
    // strip the base prime out of b; a unit must remain
    RingElement rest = b;
    unsigned k = 0;
    while (true) {
      auto q = try_divide(rest, eb->a);
      if (!q) break;
      rest = *q;
      ++k;
    }
    if (!rest.is_unit())
      fail(Errc::NotRadicalEqual,
           "factor " + to_string(rest) + " of b lies outside the target prime");
    res.trace.push_back({"radical-match",
                         "b is a unit times the " + std::to_string(k) +
                             "-th power of the base prime, so rad(b) = P"});
  } else {
    fail(Errc::UnsupportedIdealShape, "descent target must be a base prime");
  }
  return res;
}

DescendResult descend_certificate(const IdealPresentation& gens, const PrimeIdeal& m,
                                  const Config& cfg) {
  const auto* eb = m.get_if<ExtendedBase>();
  if (!eb || m.in_poly_ring())
    fail(Errc::BadArgument, "descent target must be a maximal ideal of the base ring");
  const RingSpec& R = m.base();
  if (!R.is_bezout()) fail(Errc::NotBezout, "descent needs a Bezout base ring");
  if (!gens.in_poly_ring || gens.base != R)
    fail(Errc::BadArgument, "generators must present an ideal of R[X]");

  // precondition: rad(gens) = M R[X], checked before any descent
  PrimeIdeal extended(R, true, ExtendedBase{eb->a});
  try {
    rad_equal_check(extended, gens.gens, {}, cfg);
  } catch (const Error& e) {
    fail(Errc::NotRadicalEqual,
         std::string("precondition rad(gens) = M R[X] failed: ") + e.what());
  }

  DescendResult res{RingElement::zero(R), {}, {}};
  RingElement acc = RingElement::zero(R);
  for (const auto& f : gens.gens) {
    ContentIdeal ci = content(f);
    res.contents.push_back(*ci.principal);
    res.trace.push_back({"content-principal",
                         "content of " + to_string(f) + " is principal with generator " +
                             to_string(*ci.principal)});
    acc = gcd_bezout(acc, *ci.principal).g;
  }
  res.a = acc;
  res.trace.push_back({"content-gcd",
                       "the content generators combine to the principal ideal (" +
                           to_string(acc) + ")"});

  // M = rad(a): a must be a unit times a power of the base prime
  RingElement rest = acc;
  unsigned k = 0;
  while (true) {
    auto q = try_divide(rest, eb->a);
    if (!q) break;
    rest = *q;
    ++k;
  }
  if (k == 0 || !rest.is_unit())
    fail(Errc::NotRadicalEqual,
         "content gcd " + to_string(acc) + " is not a power of the maximal ideal's generator");
  res.trace.push_back(
      {"containment-chain",
       "(f_1..f_n) sits inside the content extension (a)R[X], which sits inside "
       "M R[X]; the base prime is the unique prime over a, so M = rad(a)"});
  return res;
}

std::string extension_variable_name(unsigned k) {
  if (k <= 1) return "Z";
  return "Z" + std::to_string(k);
}

Certificate extend_certificate(const Certificate& c, const std::string& promise) {
  Certificate out = c;
  out.extension_vars = c.extension_vars + 1;
  std::string var = extension_variable_name(out.extension_vars);
  out.trace.push_back(
      {"flat-extension",
       "generators reread in the ambient extended by " + var +
           "; radical equality transfers along the flat extension. Promise: " +
           (promise.empty() ? std::string("the target extends to the extension prime")
                            : promise)});
  return out;
}

}  // namespace stci
