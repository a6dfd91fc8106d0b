#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stci/certify.hpp"
#include "stci/json_io.hpp"
#include "stci/parse.hpp"

using namespace stci;

namespace {

const Config cfg;

PrimeIdeal classify_strings(const RingSpec& R, std::initializer_list<const char*> gens) {
  IdealPresentation pres{R, true, {}};
  for (const char* g : gens) pres.gens.push_back(parse_poly(g, R, cfg));
  return classify(pres, cfg);
}

PrimeIdeal kernel_over(const RingSpec& R, const char* image) {
  RingSpec cover = R.kind() == RingKind::MonomialSubring
                       ? normalization_of(R).target
                       : R;
  return classify_kernel(R, parse_element(image, cover, cfg));
}

bool trace_mentions(const Certificate& c, const std::string& needle) {
  for (const auto& s : c.trace)
    if (s.detail.find(needle) != std::string::npos ||
        s.rule.find(needle) != std::string::npos)
      return true;
  return false;
}

}  // namespace

TEST_CASE("principal base primes certify as themselves") {
  RingSpec Z = RingSpec::integers();
  Certificate c = certify_prime(classify_strings(Z, {"5"}), cfg);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == parse_poly("5", Z, cfg));
  CHECK(c.exponent_hints == std::vector<unsigned>{1});
  CHECK(c.verification.has_value());

  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  Certificate ct = certify_prime(classify_strings(F2t, {"t"}), cfg);
  REQUIRE(ct.generators.size() == 1);
  CHECK(ct.generators[0] == parse_poly("t", F2t, cfg));
}

TEST_CASE("height-two pairs certify with two generators") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"5", "X^2 + 2"});
  Certificate c = certify_prime(p, cfg);
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0] == parse_poly("5", Z, cfg));
  CHECK(c.generators[1] == parse_poly("X^2 + 2", Z, cfg));
  CHECK(c.generators.size() == p.height());
  CHECK(trace_mentions(c, "base-generator-gcd"));
}

TEST_CASE("contraction-zero certificates strip content") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"2*X + 3"});
  Certificate c = certify_contraction_zero(p, parse_poly("4*X + 6", Z, cfg), cfg);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == parse_poly("2*X + 3", Z, cfg));

  // already primitive: certificate is the generator itself
  Certificate c2 = certify_contraction_zero(p, parse_poly("2*X + 3", Z, cfg), cfg);
  CHECK(c2.generators[0] == parse_poly("2*X + 3", Z, cfg));

  // 6X^2 + 9X = 3X(2X+3): the factor X outside the prime is discarded
  Certificate c3 = certify_contraction_zero(p, parse_poly("6*X^2 + 9*X", Z, cfg), cfg);
  CHECK(c3.generators[0] == parse_poly("2*X + 3", Z, cfg));
  CHECK(trace_mentions(c3, "discard"));
  CHECK(trace_mentions(c3, "X"));

  CHECK_THROWS_AS(certify_contraction_zero(p, parse_poly("X + 1", Z, cfg), cfg), Error);
  CHECK_THROWS_AS(certify_contraction_zero(p, UniPoly::zero(Z), cfg), Error);
}

TEST_CASE("certify_prime dispatches contraction-zero shapes") {
  RingSpec Z = RingSpec::integers();
  Certificate c = certify_prime(classify_strings(Z, {"2*X + 3"}), cfg);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == parse_poly("2*X + 3", Z, cfg));
}

TEST_CASE("Frobenius descent at p = 3") {
  RingSpec M3 = RingSpec::monomial_subring(3);
  Certificate c = frobenius_descent(kernel_over(M3, "t"), cfg);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == parse_poly("X^3 - t^3", M3, cfg));
  CHECK(c.exponent_hints == std::vector<unsigned>{3});
  CHECK(c.verification.has_value());
  // every coefficient is t^1-free by construction (it lives in the subring)
  for (const auto& coeff : c.generators[0].coeffs())
    if (!coeff.is_zero()) CHECK(coeff.t_coeff(1) == 0);
}

TEST_CASE("Frobenius descent at p = 2") {
  RingSpec M2 = RingSpec::monomial_subring(2);
  Certificate c = frobenius_descent(kernel_over(M2, "t"), cfg);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == parse_poly("X^2 + t^2", M2, cfg));
  CHECK(c.exponent_hints == std::vector<unsigned>{2});
}

TEST_CASE("descent with an image already in the ring needs no power") {
  RingSpec M2 = RingSpec::monomial_subring(2);
  Certificate c = frobenius_descent(kernel_over(M2, "t^2"), cfg);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == parse_poly("X - t^2", M2, cfg));
  CHECK(c.exponent_hints == std::vector<unsigned>{1});
}

TEST_CASE("characteristic zero refuses the descent and points elsewhere") {
  RingSpec M0 = RingSpec::monomial_subring(0);
  try {
    certify_prime(kernel_over(M0, "t"), cfg);
    FAIL("expected CharacteristicZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CharacteristicZero);
    CHECK(std::string(e.what()).find("obstruction") != std::string::npos);
  }
}

TEST_CASE("normality obstruction over QQ[t^2,t^3]") {
  RingSpec M0 = RingSpec::monomial_subring(0);
  NormalizationData nd = normalization_of(M0);
  RingElement t = RingElement::t_power(nd.target, 1);
  ObstructionReport rep = normality_obstruction(M0, t, cfg);
  CHECK(rep.n_checked == 16);
  REQUIRE(rep.failing.size() == 16);
  // -1*t and -2*t in particular, with nonzero t^1 coefficients
  CHECK(rep.failing[0] == -t);
  CHECK(rep.failing[1] == -(RingElement::from_int(nd.target, 2) * t));
  for (std::size_t n = 0; n < rep.failing.size(); ++n) {
    CHECK(rep.failing[n].t_coeff(1) == -static_cast<long>(n + 1));
    CHECK_FALSE(subring_member(rep.failing[n], nd));
  }
  // the monic witness really vanishes at t
  EvalHom h = make_eval_hom(M0, t);
  CHECK(eval(h, rep.monic_witness).is_zero());
  CHECK(rep.monic_witness.is_monic());
  CHECK(rep.conclusion.find("no principal radical generator") != std::string::npos);
}

TEST_CASE("obstruction rejects elements already in the ring") {
  RingSpec M0 = RingSpec::monomial_subring(0);
  NormalizationData nd = normalization_of(M0);
  RingElement t2 = RingElement::t_power(nd.target, 2);
  CHECK_THROWS_AS(normality_obstruction(M0, t2, cfg), Error);
  try {
    normality_obstruction(M0, t2, cfg);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ElementActuallyInRing);
  }
}

TEST_CASE("obstruction works for a shifted adjoined element") {
  RingSpec M0 = RingSpec::monomial_subring(0);
  NormalizationData nd = normalization_of(M0);
  // a = t^2 + 3t: outside the ring, integral over it
  TPoly f;
  f.c = {mpq_class(0), mpq_class(3), mpq_class(1)};
  RingElement a(nd.target, f);
  ObstructionReport rep = normality_obstruction(M0, a, cfg);
  EvalHom h = make_eval_hom(M0, a);
  CHECK(eval(h, rep.monic_witness).is_zero());
  for (const auto& c : rep.failing) CHECK(c.t_coeff(1) != 0);
}

TEST_CASE("constant descent over the integers") {
  RingSpec Z = RingSpec::integers();
  IdealPresentation five{Z, false, {UniPoly::constant(RingElement::from_int(Z, 5))}};
  PrimeIdeal p = classify(five, cfg);
  RingElement a = RingElement::from_int(Z, 5);

  ConstantDescentResult res =
      constant_descent(parse_poly("25", Z, cfg), p, a, cfg);
  CHECK(res.b == RingElement::from_int(Z, 25));
  CHECK(res.n == 2);
  CHECK(res.cofactor.is_one());

  try {
    constant_descent(parse_poly("5*X", Z, cfg), p, a, cfg);
    FAIL("expected DegreeObstruction");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeObstruction);
  }

  // constant with a stray prime factor: decisively not rad-equal
  CHECK_THROWS_AS(constant_descent(parse_poly("15", Z, cfg), p, a, cfg), Error);
}

TEST_CASE("constant descent consistency in the quadratic order") {
  RingSpec Q5 = RingSpec::quadratic_order(-5);
  QuadIdeal p2 = QuadIdeal::from_generators(-5, {{2, 0}, {1, 1}});
  PrimeIdeal p = classify_quad(p2);
  RingElement two = RingElement::from_int(Q5, 2);
  ConstantDescentResult res =
      constant_descent(UniPoly::constant(two), p, two, cfg);
  CHECK(res.b == two);
  REQUIRE(res.torsion.has_value());
  CHECK(res.torsion->m == 2);
  CHECK(res.torsion->b == QuadElt{2, 0});

  // 3 lies outside the prime above 2
  RingElement three = RingElement::from_int(Q5, 3);
  CHECK_THROWS_AS(constant_descent(UniPoly::constant(three), p, two, cfg), Error);
}

TEST_CASE("descend_certificate recovers the base generator") {
  RingSpec Z = RingSpec::integers();
  RingElement seven = RingElement::from_int(Z, 7);
  PrimeIdeal m(Z, false, ExtendedBase{seven});

  IdealPresentation gens{Z, true, {parse_poly("49", Z, cfg)}};
  DescendResult res = descend_certificate(gens, m, cfg);
  CHECK(res.a == RingElement::from_int(Z, 49));
  REQUIRE(res.contents.size() == 1);
  CHECK(res.contents[0] == RingElement::from_int(Z, 49));

  IdealPresentation direct{Z, true, {parse_poly("7", Z, cfg)}};
  CHECK(descend_certificate(direct, m, cfg).a == seven);

  IdealPresentation malformed{Z, true,
                              {parse_poly("7*X + 14", Z, cfg), parse_poly("21", Z, cfg)}};
  try {
    descend_certificate(malformed, m, cfg);
    FAIL("expected NotRadicalEqual");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRadicalEqual);
  }
}

TEST_CASE("extension keeps generators and re-verifies") {
  RingSpec Z = RingSpec::integers();
  Certificate base = certify_prime(classify_strings(Z, {"5"}), cfg);
  Certificate ext = extend_certificate(base, "extension of (5) to one more variable");
  CHECK(ext.generators == base.generators);
  CHECK(ext.extension_vars == 1);
  CHECK(ext.exponent_hints == base.exponent_hints);
  CHECK(trace_mentions(ext, "flat-extension"));

  RingSpec M3 = RingSpec::monomial_subring(3);
  Certificate frob = frobenius_descent(kernel_over(M3, "t"), cfg);
  Certificate fext = extend_certificate(frob, "");
  CHECK(fext.generators[0] == parse_poly("X^3 - t^3", M3, cfg));
  // the sealed proof still replays in the base ambient
  REQUIRE(fext.verification.has_value());
  CHECK(replay_proof(*fext.verification, fext.target, fext.generators));
  Certificate fext2 = extend_certificate(fext, "");
  CHECK(fext2.extension_vars == 2);
}

TEST_CASE("certificate size law and soundness on every construction") {
  RingSpec Z = RingSpec::integers();
  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  RingSpec M2 = RingSpec::monomial_subring(2);
  std::vector<Certificate> certs{
      certify_prime(classify_strings(Z, {"5"}), cfg),
      certify_prime(classify_strings(Z, {"2*X + 3"}), cfg),
      certify_prime(classify_strings(Z, {"5", "X^2 + 2"}), cfg),
      certify_prime(classify_strings(F2t, {"t", "X^2 + X + 1"}), cfg),
      certify_prime(kernel_over(F2t, "t"), cfg),
      certify_prime(kernel_over(M2, "t"), cfg),
  };
  for (const auto& c : certs) {
    CHECK(c.generators.size() == c.target.height());
    REQUIRE(c.verification.has_value());
    CHECK(replay_proof(*c.verification, c.target, c.generators));
    for (const auto& g : c.generators) CHECK(member(g, c.target));
  }
}

TEST_CASE("identical inputs give byte-identical certificates") {
  RingSpec M3 = RingSpec::monomial_subring(3);
  Certificate a = certify_prime(kernel_over(M3, "t"), cfg);
  Certificate b = certify_prime(kernel_over(M3, "t"), cfg);
  CHECK(certificate_to_json(a).dump() == certificate_to_json(b).dump());

  RingSpec Z = RingSpec::integers();
  Certificate c = certify_prime(classify_strings(Z, {"5", "X^2 + 2"}), cfg);
  Certificate d = certify_prime(classify_strings(Z, {"5", "X^2 + 2"}), cfg);
  CHECK(certificate_to_json(c).dump() == certificate_to_json(d).dump());
}

TEST_CASE("kernel over the full polynomial coefficient ring") {
  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  Certificate c = certify_prime(kernel_over(F2t, "t"), cfg);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == parse_poly("X + t", F2t, cfg));  // X - t over GF(2)
}
