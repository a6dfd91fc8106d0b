#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stci/quadlat.hpp"

using namespace stci;

namespace {

const long D = -5;

QuadIdeal P2() { return QuadIdeal::from_generators(D, {{2, 0}, {1, 1}}); }
QuadIdeal P3plus() { return QuadIdeal::from_generators(D, {{3, 0}, {1, 1}}); }
QuadIdeal P3minus() { return QuadIdeal::from_generators(D, {{3, 0}, {1, -1}}); }

}  // namespace

TEST_CASE("unit ideal is a multiplicative identity") {
  QuadIdeal one = QuadIdeal::whole(D);
  QuadIdeal p = P2();
  CHECK(quad_mul(p, one) == p);
  CHECK(quad_mul(one, p) == p);
}

TEST_CASE("(2, 1+w)^2 is the lattice of (2)") {
  QuadIdeal p = P2();
  CHECK(p.norm() == 2);
  QuadIdeal sq = quad_mul(p, p);

  // oracle: expand the four pairwise generator products by hand and HNF them
  // (2)(2)=4, (2)(1+w)=2+2w, (1+w)(2)=2+2w, (1+w)(1+w)=1-5+2w=-4+2w
  QuadIdeal oracle = QuadIdeal::from_generators(
      D, {{4, 0}, {2, 2}, {2, 2}, {-4, 2}});
  CHECK(sq == oracle);
  CHECK(sq == QuadIdeal::principal(D, {2, 0}));
}

TEST_CASE("norm multiplicativity on random ideals") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> c(-9, 9);
  auto rand_ideal = [&]() {
    while (true) {
      std::vector<QuadElt> gens{{c(rng), c(rng)}, {c(rng), c(rng)}};
      bool all_zero = true;
      for (auto& g : gens)
        if (g.u != 0 || g.v != 0) all_zero = false;
      if (all_zero) continue;
      return QuadIdeal::from_generators(D, gens);
    }
  };
  for (int i = 0; i < 200; ++i) {
    QuadIdeal a = rand_ideal(), b = rand_ideal();
    CHECK(quad_mul(a, b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("HNF uniqueness: same lattice, same basis") {
  QuadIdeal a = QuadIdeal::from_generators(D, {{2, 0}, {1, 1}});
  QuadIdeal b = QuadIdeal::from_generators(D, {{1, 1}, {2, 0}, {3, 1}});  // 3+w = (1+w)+2
  CHECK(a == b);
  CHECK(a.a() == b.a());
  CHECK(a.b() == b.b());
  CHECK(a.c() == b.c());
}

TEST_CASE("principality by norm-form enumeration") {
  CHECK(is_principal(QuadIdeal::principal(D, {2, 0})).value() == QuadElt{2, 0});

  // no u, v solve u^2 + 5 v^2 = 2 (tiny exhaustive oracle)
  for (long u = -2; u <= 2; ++u)
    for (long v = -1; v <= 1; ++v) CHECK(u * u + 5 * v * v != 2);
  CHECK_FALSE(is_principal(P2()).has_value());

  // conjugate product above 3 is (3)
  QuadIdeal prod = quad_mul(P3plus(), P3minus());
  auto g = is_principal(prod);
  REQUIRE(g.has_value());
  CHECK(*g == QuadElt{3, 0});

  CHECK_THROWS_AS(is_principal(QuadIdeal::zero(D)), Error);
}

TEST_CASE("parallel scan matches the serial reference") {
  for (const QuadIdeal& i : {QuadIdeal::principal(D, {2, 0}), P2(),
                             quad_mul(P3plus(), P3minus()),
                             quad_mul(P2(), P2())}) {
    CHECK(is_principal(i) == is_principal_parallel(i));
  }
}

TEST_CASE("membership in the lattice") {
  QuadIdeal p = P2();
  CHECK(p.contains({2, 0}));
  CHECK(p.contains({1, 1}));
  CHECK(p.contains({-1, 3}));  // (1+w) + 2*(-1+w)
  CHECK_FALSE(p.contains({1, 0}));
}

TEST_CASE("torsion witness above 2") {
  TorsionWitness tw = torsion_witness(P2());
  CHECK(tw.m == 2);
  CHECK(tw.b == QuadElt{2, 0});
  // validity by lattice equality, not by norms
  CHECK(quad_pow(P2(), tw.m) == QuadIdeal::principal(D, tw.b));
  CHECK(quad_norm_elt(D, tw.b) == 4);
}

TEST_CASE("torsion witness above 3") {
  TorsionWitness tw = torsion_witness(P3plus());
  CHECK(tw.m == 2);
  CHECK(quad_norm_elt(D, tw.b) == 9);
  // generator is +-(2 - w) up to units; normalization picks u > 0
  CHECK(tw.b == QuadElt{2, -1});
  CHECK(quad_pow(P3plus(), 2) == QuadIdeal::principal(D, tw.b));
}

TEST_CASE("inert prime has m = 1") {
  // squares mod 11 are {1,3,4,5,9}; -5 = 6 mod 11 is not among them
  std::vector<long> squares;
  for (long x = 1; x <= 10; ++x) squares.push_back((x * x) % 11);
  CHECK(std::find(squares.begin(), squares.end(), 6L) == squares.end());

  QuadIdeal eleven = QuadIdeal::principal(D, {11, 0});
  CHECK(is_prime_quad(eleven));
  TorsionWitness tw = torsion_witness(eleven);
  CHECK(tw.m == 1);
  CHECK(tw.b == QuadElt{11, 0});
}

TEST_CASE("m = 1 exactly when the ideal itself is principal") {
  for (const QuadIdeal& p : {P2(), P3plus(), P3minus(),
                             QuadIdeal::principal(D, {11, 0}),
                             QuadIdeal::from_generators(D, {{7, 0}, {3, 1}})}) {
    if (!is_prime_quad(p)) continue;
    TorsionWitness tw = torsion_witness(p);
    CHECK((tw.m == 1) == is_principal(p).has_value());
  }
}

TEST_CASE("primality screen rejects composite lattices") {
  CHECK_FALSE(is_prime_quad(QuadIdeal::principal(D, {6, 0})));
  CHECK_FALSE(is_prime_quad(QuadIdeal::principal(D, {2, 0})));  // ramified square
  CHECK(is_prime_quad(P2()));
  CHECK(is_prime_quad(P3plus()));
  CHECK_THROWS_AS(torsion_witness(QuadIdeal::principal(D, {6, 0})), Error);
}

TEST_CASE("ideal arithmetic stays closed under sqrt(d)") {
  // multiplying by w maps the lattice into itself
  for (const QuadIdeal& i : {P2(), P3plus(), quad_mul(P2(), P3plus())}) {
    for (const auto& v : i.lattice_basis()) {
      QuadElt wv{mpz_class(D) * v.v, v.u};
      CHECK(i.contains(wv));
    }
  }
}
