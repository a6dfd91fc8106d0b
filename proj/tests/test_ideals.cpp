#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stci/ideals.hpp"
#include "stci/parse.hpp"

using namespace stci;

namespace {

const Config cfg;

UniPoly zp(const char* s) {
  return parse_poly(s, RingSpec::integers(), cfg);
}

PrimeIdeal classify_strings(const RingSpec& R, std::initializer_list<const char*> gens) {
  IdealPresentation pres{R, true, {}};
  for (const char* g : gens) pres.gens.push_back(parse_poly(g, R, cfg));
  return classify(pres, cfg);
}

}  // namespace

TEST_CASE("membership examples") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"2", "X"});
  CHECK(member(zp("10"), p));
  CHECK_FALSE(member(zp("5"), p));
  CHECK(member(zp("2*X + 4"), p));

  RingSpec M3 = RingSpec::monomial_subring(3);
  PrimeIdeal ker = classify_kernel(M3, parse_element("t", normalization_of(M3).target, cfg));
  CHECK(member(parse_poly("X^3 - t^3", M3, cfg), ker));
  CHECK_FALSE(member(parse_poly("X^2 - t^3", M3, cfg), ker));

  PrimeIdeal q = classify_strings(Z, {"2*X + 3"});
  CHECK_FALSE(member(zp("X"), q));
  CHECK(member(zp("4*X + 6"), q));
}

TEST_CASE("contraction examples") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal mp = classify_strings(Z, {"5", "X^2 + 2"});
  PrimeIdeal c = contract(mp);
  CHECK_FALSE(c.in_poly_ring());
  REQUIRE(c.get_if<ExtendedBase>());
  CHECK(c.get_if<ExtendedBase>()->a == RingElement::from_int(Z, 5));

  PrimeIdeal cz = classify_strings(Z, {"2*X + 3"});
  CHECK(contract(cz).get_if<ZeroShape>() != nullptr);

  RingSpec M3 = RingSpec::monomial_subring(3);
  PrimeIdeal ker = classify_kernel(M3, parse_element("t", normalization_of(M3).target, cfg));
  PrimeIdeal kc = contract(ker);
  CHECK(kc.get_if<ZeroShape>() != nullptr);
  CHECK(kc.height() == 0);
}

TEST_CASE("classification of a maximal pair checks residues") {
  RingSpec Z = RingSpec::integers();
  // squares mod 5 are {0, 1, 4}; -2 = 3 mod 5 is not among them, so X^2 + 2
  // stays irreducible
  std::vector<long> squares;
  for (long x = 0; x < 5; ++x) squares.push_back((x * x) % 5);
  CHECK(std::find(squares.begin(), squares.end(), 3L) == squares.end());

  PrimeIdeal p = classify_strings(Z, {"5", "X^2 + 2"});
  CHECK(p.height() == 2);
  CHECK(p.get_if<MaximalPair>() != nullptr);

  // X^2 - 1 = (X-1)(X+1) splits mod 5
  CHECK_THROWS_AS(classify_strings(Z, {"5", "X^2 - 1"}), Error);
  // 4 is not prime in the base
  CHECK_THROWS_AS(classify_strings(Z, {"4", "X^2 + 2"}), Error);
}

TEST_CASE("classification rejects non-primitive single generators with a witness") {
  RingSpec Z = RingSpec::integers();
  try {
    classify_strings(Z, {"4*X + 6"});
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
    CHECK(std::string(e.what()).find("2*X + 3") != std::string::npos);
  }
}

TEST_CASE("classification of the zero ideal") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"0"});
  CHECK(p.height() == 0);
  CHECK(p.get_if<ZeroShape>() != nullptr);
}

TEST_CASE("classification of extended base primes and reducible rejects") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"5"});
  CHECK(p.height() == 1);
  CHECK(p.get_if<ExtendedBase>() != nullptr);
  CHECK_THROWS_AS(classify_strings(Z, {"6"}), Error);

  // X^2 - 1 factors over QQ
  CHECK_THROWS_AS(classify_strings(Z, {"X^2 - 1"}), Error);
  // X^2 + 1 is irreducible
  PrimeIdeal q = classify_strings(Z, {"X^2 + 1"});
  CHECK(q.get_if<ContractionZero>() != nullptr);
  CHECK(q.height() == 1);

  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  PrimeIdeal tprime = classify_strings(F2t, {"t"});
  CHECK(tprime.get_if<ExtendedBase>() != nullptr);
  // t^2 + t = t(t+1) is not prime in GF(2)[t]
  CHECK_THROWS_AS(classify_strings(F2t, {"t^2 + t"}), Error);
  // X^2 + t is irreducible over GF(2)(t)
  PrimeIdeal bi = classify_strings(F2t, {"X^2 + t"});
  CHECK(bi.get_if<ContractionZero>() != nullptr);
  // X^2 + t^2 = (X + t)^2 over GF(2)
  CHECK_THROWS_AS(classify_strings(F2t, {"X^2 + t^2"}), Error);
}

TEST_CASE("classify after reading back generators is the identity") {
  RingSpec Z = RingSpec::integers();
  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  std::vector<PrimeIdeal> shapes{
      classify_strings(Z, {"0"}),
      classify_strings(Z, {"5"}),
      classify_strings(Z, {"2*X + 3"}),
      classify_strings(Z, {"5", "X^2 + 2"}),
      classify_strings(F2t, {"t", "X^2 + X + 1"}),
  };
  for (const auto& p : shapes) {
    PrimeIdeal again = classify(generators_of(p), cfg);
    CHECK(again == p);
  }
  // quadratic primes re-classify from their lattice basis
  QuadIdeal q = QuadIdeal::from_generators(-5, {{2, 0}, {1, 1}});
  PrimeIdeal qp = classify_quad(q);
  IdealPresentation back = generators_of(qp);
  REQUIRE(back.gens.size() == 2);
  PrimeIdeal again = classify(back, cfg);
  CHECK(again == qp);
}

TEST_CASE("member respects ideal axioms (randomized)") {
  RingSpec Z = RingSpec::integers();
  std::vector<PrimeIdeal> primes{
      classify_strings(Z, {"5"}),
      classify_strings(Z, {"2*X + 3"}),
      classify_strings(Z, {"5", "X^2 + 2"}),
  };
  std::mt19937 rng(808);
  std::uniform_int_distribution<long> coeff(-9, 9);
  auto rand_poly = [&]() {
    std::vector<RingElement> cs;
    for (int k = 0; k <= 3; ++k) cs.push_back(RingElement::from_int(Z, coeff(rng)));
    return UniPoly(Z, cs);
  };
  for (const auto& p : primes) {
    std::vector<UniPoly> members;
    IdealPresentation gen = generators_of(p);
    for (int i = 0; i < 40; ++i) {
      UniPoly combo = UniPoly::zero(Z);
      for (const auto& g : gen.gens) combo = combo + poly_mul(rand_poly(), g);
      CHECK(member(combo, p));
      members.push_back(combo);
    }
    for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
      CHECK(member(poly_add(members[i], members[i + 1]), p));
      CHECK(member(poly_mul(rand_poly(), members[i]), p));
    }
  }
}

TEST_CASE("primes are radical: e^n in p implies e in p (randomized)") {
  RingSpec Z = RingSpec::integers();
  std::vector<PrimeIdeal> primes{
      classify_strings(Z, {"5"}),
      classify_strings(Z, {"2*X + 3"}),
      classify_strings(Z, {"5", "X^2 + 2"}),
  };
  std::mt19937 rng(4040);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> exp(1, 5);
  for (const auto& p : primes) {
    for (int i = 0; i < 60; ++i) {
      std::vector<RingElement> cs;
      for (int k = 0; k <= 2; ++k) cs.push_back(RingElement::from_int(Z, coeff(rng)));
      UniPoly e(Z, cs);
      unsigned n = exp(rng);
      if (member(poly_pow(e, n), p)) CHECK(member(e, p));
    }
  }
}

TEST_CASE("contraction sits inside the original prime") {
  RingSpec Z = RingSpec::integers();
  for (const auto& p : {classify_strings(Z, {"5"}), classify_strings(Z, {"5", "X^2 + 2"}),
                        classify_strings(Z, {"2*X + 3"})}) {
    PrimeIdeal c = contract(p);
    if (const auto* eb = c.get_if<ExtendedBase>())
      CHECK(member(UniPoly::constant(eb->a), p));
    if (c.get_if<ZeroShape>()) CHECK(member(UniPoly::zero(Z), p));
  }
}

TEST_CASE("base-ring classification routes quadratic lattices") {
  RingSpec Q5 = RingSpec::quadratic_order(-5);
  IdealPresentation pres{Q5, false, {UniPoly::constant(RingElement::from_int(Q5, 11))}};
  PrimeIdeal p = classify(pres, cfg);
  CHECK(p.get_if<QuadPrimeShape>() != nullptr);
  CHECK(p.height() == 1);

  IdealPresentation bad{Q5, false, {UniPoly::constant(RingElement::from_int(Q5, 6))}};
  CHECK_THROWS_AS(classify(bad, cfg), Error);
}

TEST_CASE("unsupported shapes are reported as such") {
  RingSpec Z = RingSpec::integers();
  IdealPresentation three{Z, true, {zp("2"), zp("X"), zp("X + 1")}};
  CHECK_THROWS_AS(classify(three, cfg), Error);
  IdealPresentation twopoly{Z, true, {zp("X"), zp("X + 2")}};
  CHECK_THROWS_AS(classify(twopoly, cfg), Error);
}
