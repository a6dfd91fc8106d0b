#include <algorithm>

#include "stci/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stci {

namespace {

struct OracleTarget {
  enum class Kind { Prime, Principal, Pair } kind;
  const PrimeIdeal* prime = nullptr;
  UniPoly gen;            // Principal
  RingElement pair_c;     // Pair: constant
  UniPoly pair_f;         // Pair: monic

  OracleTarget() : gen(RingSpec::integers()), pair_c(RingElement::zero(RingSpec::integers())), pair_f(RingSpec::integers()) {}
};

// The oracle needs decidable membership; that limits presentations to a
// principal generator or a (prime constant, monic polynomial) pair.
OracleTarget compile_target(const RadTarget& t) {
  OracleTarget ot;
  if (const auto* p = std::get_if<PrimeIdeal>(&t)) {
    ot.kind = OracleTarget::Kind::Prime;
    ot.prime = p;
    return ot;
  }
  const auto& pres = std::get<IdealPresentation>(t);
  std::vector<UniPoly> gens;
  for (const auto& g : pres.gens)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.size() == 1) {
    ot.kind = OracleTarget::Kind::Principal;
    ot.gen = gens[0];
    return ot;
  }
  if (gens.size() == 2) {
    const UniPoly* cst = nullptr;
    const UniPoly* pol = nullptr;
    for (const auto& g : gens) (g.is_constant() ? cst : pol) = &g;
    if (cst && pol && pol->is_monic()) {
      ot.kind = OracleTarget::Kind::Pair;
      ot.pair_c = cst->coeff(0);
      ot.pair_f = *pol;
      return ot;
    }
  }
  fail(Errc::CapTooLarge,
       "oracle membership is decidable only for principal, monic-pair and "
       "prime targets");
}

bool target_member(const UniPoly& e, const OracleTarget& ot) {
  switch (ot.kind) {
    case OracleTarget::Kind::Prime:
      return member(e, *ot.prime);
    case OracleTarget::Kind::Principal:
      return try_div_exact(e, ot.gen).has_value();
    case OracleTarget::Kind::Pair: {
      // monic reduction, then every remaining coefficient must be divisible
      // by the constant (complete when R/(c) is a domain)
      UniPoly r = divrem_monic(e, ot.pair_f).r;
      for (const auto& c : r.coeffs())
        if (!try_divide(c, ot.pair_c)) return false;
      return true;
    }
  }
  return false;
}

bool target_rad_member(const UniPoly& e, const OracleTarget& ot, unsigned cap) {
  UniPoly pw = e;
  for (unsigned n = 1; n <= cap; ++n) {
    if (n > 1) pw = poly_mul(pw, e);
    if (target_member(pw, ot)) return true;
  }
  return false;
}

RingSpec ambient_of(const RadTarget& t) {
  if (const auto* p = std::get_if<PrimeIdeal>(&t)) return p->base();
  return std::get<IdealPresentation>(t).base;
}

OracleResult oracle_scan(const RadTarget& lhs, const RadTarget& rhs,
                         unsigned degree_cap, const Config& cfg, bool parallel) {
  RingSpec R = ambient_of(lhs);
  if (ambient_of(rhs) != R)
    fail(Errc::MixedRings, "oracle sides live over different rings");
  OracleTarget lt = compile_target(lhs);
  OracleTarget rt = compile_target(rhs);

  CoeffEnumerator en(R, degree_cap);
  unsigned long long total = 1;
  for (unsigned i = 0; i <= degree_cap; ++i) {
    if (total > cfg.oracle_budget / en.size())
      fail(Errc::CapTooLarge, "candidate space exceeds the enumeration budget");
    total *= en.size();
  }
  if (total > cfg.oracle_budget)
    fail(Errc::CapTooLarge, "candidate space exceeds the enumeration budget");

  auto candidate = [&](unsigned long long idx) {
    std::vector<RingElement> cs;
    unsigned long long rest = idx;
    for (unsigned i = 0; i <= degree_cap; ++i) {
      cs.push_back(en.at(rest % en.size()));
      rest /= en.size();
    }
    return UniPoly(R, std::move(cs));
  };

  long long n = static_cast<long long>(total);
  long long mismatch = n;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : mismatch)
#endif
    for (long long i = 0; i < n; ++i) {
      UniPoly e = candidate(static_cast<unsigned long long>(i));
      if (e.is_zero()) continue;
      bool inl = target_rad_member(e, lt, degree_cap);
      bool inr = target_rad_member(e, rt, degree_cap);
      if (inl != inr) mismatch = std::min(mismatch, i);
    }
  } else {
    for (long long i = 0; i < n; ++i) {
      UniPoly e = candidate(static_cast<unsigned long long>(i));
      if (e.is_zero()) continue;
      bool inl = target_rad_member(e, lt, degree_cap);
      bool inr = target_rad_member(e, rt, degree_cap);
      if (inl != inr) {
        mismatch = i;
        break;
      }
    }
  }

  OracleResult res;
  res.candidates = total;
  res.equal = (mismatch == n);
  if (!res.equal) res.counterexample = candidate(static_cast<unsigned long long>(mismatch));
  return res;
}

}  // namespace

bool oracle_member(const UniPoly& e, const RadTarget& t) {
  OracleTarget ot = compile_target(t);
  return target_member(e, ot);
}

bool oracle_rad_member(const UniPoly& e, const RadTarget& t, unsigned degree_cap) {
  OracleTarget ot = compile_target(t);
  return target_rad_member(e, ot, degree_cap);
}

OracleResult oracle_small(const RadTarget& lhs, const RadTarget& rhs,
                          unsigned degree_cap, const Config& cfg) {
  return oracle_scan(lhs, rhs, degree_cap, cfg, true);
}

OracleResult oracle_small_serial(const RadTarget& lhs, const RadTarget& rhs,
                                 unsigned degree_cap, const Config& cfg) {
  return oracle_scan(lhs, rhs, degree_cap, cfg, false);
}

}  // namespace stci
