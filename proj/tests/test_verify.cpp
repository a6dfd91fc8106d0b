#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stci/parse.hpp"
#include "stci/verify.hpp"

using namespace stci;

namespace {

const Config cfg;

IdealPresentation pres_of(const RingSpec& R, std::initializer_list<const char*> gens) {
  IdealPresentation pres{R, true, {}};
  for (const char* g : gens) pres.gens.push_back(parse_poly(g, R, cfg));
  return pres;
}

PrimeIdeal classify_strings(const RingSpec& R, std::initializer_list<const char*> gens) {
  return classify(pres_of(R, gens), cfg);
}

}  // namespace

TEST_CASE("radical membership with quotient witness") {
  // (X - t)^3 = X^3 - t^3 over GF(3)[t], so n = 3 with quotient 1
  RingSpec F3t = RingSpec::poly_over_prime_field(3);
  UniPoly e = parse_poly("X - t", F3t, cfg);
  IdealPresentation target = pres_of(F3t, {"X^3 - t^3"});
  RadicalMemberResult rm = radical_member(e, RadTarget{target}, 10);
  REQUIRE(rm.status == MemberStatus::Proven);
  CHECK(rm.n == 3);
  REQUIRE(rm.witness->kind == MembershipWitness::Kind::Quotient);
  CHECK(rm.witness->quotient->is_constant());
  CHECK(rm.witness->quotient->coeff(0).is_one());
  CHECK(replay_membership(e, rm.n, *rm.witness, RadTarget{target}));
}

TEST_CASE("membership in a prime target is decisive at n = 1") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"2", "X"});
  RadicalMemberResult rm =
      radical_member(parse_poly("10", Z, cfg), RadTarget{p}, 10);
  CHECK(rm.status == MemberStatus::Proven);
  CHECK(rm.n == 1);

  PrimeIdeal two = classify_strings(Z, {"2"});
  RadicalMemberResult neg =
      radical_member(parse_poly("3", Z, cfg), RadTarget{two}, 10);
  CHECK(neg.status == MemberStatus::RefutedPrime);
}

TEST_CASE("transcript search on a pair presentation") {
  RingSpec Z = RingSpec::integers();
  IdealPresentation target = pres_of(Z, {"2", "X"});
  UniPoly e = parse_poly("10", Z, cfg);
  RadicalMemberResult rm = radical_member(e, RadTarget{target}, 10);
  REQUIRE(rm.status == MemberStatus::Proven);
  CHECK(rm.n == 1);
  CHECK(replay_membership(e, rm.n, *rm.witness, RadTarget{target}));

  // no power of 7 enters (7X+14, 21)
  IdealPresentation malformed = pres_of(Z, {"7*X + 14", "21"});
  RadicalMemberResult stuck =
      radical_member(parse_poly("7", Z, cfg), RadTarget{malformed}, 64);
  CHECK(stuck.status == MemberStatus::NotProvenAtBound);
}

TEST_CASE("monotonicity in the bound") {
  RingSpec F3t = RingSpec::poly_over_prime_field(3);
  UniPoly e = parse_poly("X - t", F3t, cfg);
  IdealPresentation target = pres_of(F3t, {"X^3 - t^3"});
  RadicalMemberResult at3 = radical_member(e, RadTarget{target}, 3);
  RadicalMemberResult at50 = radical_member(e, RadTarget{target}, 50);
  REQUIRE(at3.status == MemberStatus::Proven);
  REQUIRE(at50.status == MemberStatus::Proven);
  CHECK(at3.n == at50.n);
}

TEST_CASE("rad_equal on the Frobenius certificate") {
  RingSpec M3 = RingSpec::monomial_subring(3);
  PrimeIdeal ker = classify_kernel(M3, parse_element("t", normalization_of(M3).target, cfg));
  std::vector<UniPoly> gens{parse_poly("X^3 - t^3", M3, cfg)};
  RadicalProof proof = rad_equal_check(ker, gens, {3}, cfg);
  REQUIRE(proof.inward.size() == 1);
  CHECK(proof.inward[0].n == 1);
  REQUIRE(proof.outward.size() == 2);  // designated test set
  CHECK(proof.outward[0].n == 3);      // X^2 - t^2 cubes into the ideal
  CHECK(proof.outward[1].n == 1);      // X^3 - t^3 itself
  CHECK_FALSE(proof.test_set_note.empty());
  CHECK(replay_proof(proof, ker, gens));
}

TEST_CASE("rad_equal with identical generator sets") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"5", "X^2 + 2"});
  std::vector<UniPoly> gens{parse_poly("5", Z, cfg), parse_poly("X^2 + 2", Z, cfg)};
  RadicalProof proof = rad_equal_check(p, gens, {1, 1}, cfg);
  for (const auto& rec : proof.outward) CHECK(rec.n == 1);
  CHECK(replay_proof(proof, p, gens));
}

TEST_CASE("rad_equal rejects a wrong certificate decisively") {
  RingSpec Z = RingSpec::integers();
  PrimeIdeal five = classify_strings(Z, {"5"});
  std::vector<UniPoly> gens{parse_poly("2*X + 3", Z, cfg)};
  try {
    rad_equal_check(five, gens, {}, cfg);
    FAIL("expected VerificationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerificationFailed);
  }
}

TEST_CASE("rad_equal distinguishes not-proven from refuted") {
  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  PrimeIdeal xprime = classify_strings(F2t, {"X"});
  // t is not in rad(X); the outward check for X runs fine but the inward
  // membership of t fails decisively
  std::vector<UniPoly> gens{parse_poly("t", F2t, cfg)};
  try {
    rad_equal_check(xprime, gens, {}, cfg);
    FAIL("expected VerificationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerificationFailed);
  }

  // generators inside the prime but never reaching it: inward passes, the
  // outward search exhausts the bound
  Config small = cfg;
  small.radical_bound = 4;
  PrimeIdeal ct = classify_strings(F2t, {"X + t"});
  std::vector<UniPoly> weak{parse_poly("t*X + t^2", F2t, cfg)};  // t(X+t)
  try {
    rad_equal_check(ct, weak, {}, small);
    FAIL("expected NotProvenAtBound");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotProvenAtBound);
  }
}

TEST_CASE("symmetric failures when both directions are expressible") {
  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  PrimeIdeal xp = classify_strings(F2t, {"X"});
  PrimeIdeal tp = classify_strings(F2t, {"t"});
  std::vector<UniPoly> gx{parse_poly("X", F2t, cfg)};
  std::vector<UniPoly> gt{parse_poly("t", F2t, cfg)};
  CHECK_THROWS_AS(rad_equal_check(xp, gt, {}, cfg), Error);
  CHECK_THROWS_AS(rad_equal_check(tp, gx, {}, cfg), Error);
  CHECK_NOTHROW(rad_equal_check(xp, gx, {}, cfg));
  CHECK_NOTHROW(rad_equal_check(tp, gt, {}, cfg));
}

TEST_CASE("oracle examples") {
  Config c = cfg;
  RingSpec M2 = RingSpec::monomial_subring(2);
  PrimeIdeal ker = classify_kernel(M2, parse_element("t", normalization_of(M2).target, c));

  OracleResult eq = oracle_small(RadTarget{pres_of(M2, {"X^2 + t^2"})},
                                 RadTarget{ker}, 3, c);
  CHECK(eq.equal);
  CHECK(eq.candidates == 4096);  // (2^3)^4 coefficient tuples

  RingSpec F2t = RingSpec::poly_over_prime_field(2);
  OracleResult same = oracle_small(RadTarget{pres_of(F2t, {"X"})},
                                   RadTarget{pres_of(F2t, {"X^2"})}, 2, c);
  CHECK(same.equal);

  OracleResult diff = oracle_small(RadTarget{pres_of(F2t, {"X"})},
                                   RadTarget{pres_of(F2t, {"t"})}, 2, c);
  CHECK_FALSE(diff.equal);
  CHECK(diff.counterexample.has_value());

  Config tiny = cfg;
  tiny.oracle_budget = 100;
  CHECK_THROWS_AS(
      oracle_small(RadTarget{pres_of(F2t, {"X"})}, RadTarget{pres_of(F2t, {"t"})}, 3, tiny),
      Error);
}

TEST_CASE("oracle serial and parallel scans agree") {
  Config c = cfg;
  RingSpec M2 = RingSpec::monomial_subring(2);
  PrimeIdeal ker = classify_kernel(M2, parse_element("t", normalization_of(M2).target, c));
  RingSpec F2t = RingSpec::poly_over_prime_field(2);

  struct Case {
    RadTarget lhs, rhs;
    unsigned cap;
  };
  std::vector<Case> cases{
      {RadTarget{pres_of(M2, {"X^2 + t^2"})}, RadTarget{ker}, 3},
      {RadTarget{pres_of(M2, {"X^2 + t^3"})}, RadTarget{ker}, 3},
      {RadTarget{pres_of(F2t, {"X"})}, RadTarget{pres_of(F2t, {"X^2"})}, 3},
      {RadTarget{pres_of(F2t, {"X"})}, RadTarget{pres_of(F2t, {"t"})}, 3},
  };
  for (const auto& cse : cases) {
    OracleResult s = oracle_small_serial(cse.lhs, cse.rhs, cse.cap, c);
    OracleResult p = oracle_small(cse.lhs, cse.rhs, cse.cap, c);
    CHECK(s.equal == p.equal);
    CHECK(s.candidates == p.candidates);
    CHECK((s.counterexample.has_value()) == (p.counterexample.has_value()));
    if (s.counterexample && p.counterexample)
      CHECK(*s.counterexample == *p.counterexample);
  }
}

TEST_CASE("oracle agrees with rad_equal on small instances") {
  Config c = cfg;
  RingSpec M2 = RingSpec::monomial_subring(2);
  PrimeIdeal ker = classify_kernel(M2, parse_element("t", normalization_of(M2).target, c));
  RingSpec F2t = RingSpec::poly_over_prime_field(2);

  struct Inst {
    PrimeIdeal target;
    std::vector<UniPoly> gens;
    unsigned cap;
  };
  std::vector<Inst> insts{
      {ker, {parse_poly("X^2 + t^2", M2, c)}, 3},
      {classify_strings(F2t, {"X"}), {parse_poly("X^2", F2t, c)}, 3},
      {classify_strings(F2t, {"X + t"}), {parse_poly("X + t", F2t, c)}, 3},
      // engineered negatives
      {ker, {parse_poly("X^2 + t^3", M2, c)}, 3},
      {ker, {parse_poly("t^2", M2, c)}, 3},
      {classify_strings(F2t, {"X"}), {parse_poly("t", F2t, c)}, 3},
      {classify_strings(F2t, {"t"}), {parse_poly("X", F2t, c)}, 3},
      {classify_strings(F2t, {"X"}), {parse_poly("X + 1", F2t, c)}, 3},
  };
  int negatives = 0;
  for (const auto& inst : insts) {
    bool rad_ok = true;
    try {
      rad_equal_check(inst.target, inst.gens, {}, c);
    } catch (const Error&) {
      rad_ok = false;
    }
    OracleResult o = oracle_small(
        RadTarget{IdealPresentation{inst.target.base(), true, inst.gens}},
        RadTarget{inst.target}, inst.cap, c);
    CHECK(rad_ok == o.equal);
    if (!o.equal) ++negatives;
  }
  CHECK(negatives >= 5);
}

TEST_CASE("witness replay survives serialization order") {
  // replays recompute the arithmetic from scratch
  RingSpec Z = RingSpec::integers();
  PrimeIdeal p = classify_strings(Z, {"5", "X^2 + 2"});
  std::vector<UniPoly> gens{parse_poly("5", Z, cfg), parse_poly("X^2 + 2", Z, cfg)};
  RadicalProof proof = rad_equal_check(p, gens, {}, cfg);
  CHECK(replay_proof(proof, p, gens));
  // tampering with a generator breaks the replay
  std::vector<UniPoly> tampered{parse_poly("5", Z, cfg), parse_poly("X^2 + 3", Z, cfg)};
  CHECK_FALSE(replay_proof(proof, p, tampered));
}
