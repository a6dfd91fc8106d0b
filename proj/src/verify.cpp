#include "stci/verify.hpp"

#include <algorithm>
#include <sstream>

namespace stci {

namespace {

UniPoly apply_steps(const UniPoly& start, const std::vector<ReductionStep>& steps,
                    const std::vector<UniPoly>& gens) {
  UniPoly r = start;
  for (const auto& s : steps) {
    UniPoly term = poly_mul(UniPoly::monomial(s.multiplier, s.shift), gens[s.gen_index]);
    r = r - term;
  }
  return r;
}

// Bounded top-reduction against a generator list. Sound: every subtraction
// stays in the ideal's coset. Not complete in general; complete for a single
// generator and for (prime constant, monic polynomial) pairs.
bool reduce_to_zero(const UniPoly& e, const std::vector<UniPoly>& gens,
                    std::vector<ReductionStep>& steps) {
  UniPoly r = e;
  while (!r.is_zero()) {
    bool stepped = false;
    int d = r.degree();
    const RingElement lc = r.leading();
    // exact kill of the leading term
    for (std::size_t k = 0; k < gens.size() && !stepped; ++k) {
      const UniPoly& g = gens[k];
      if (g.is_zero() || g.degree() > d) continue;
      if (auto q = try_divide(lc, g.leading())) {
        unsigned shift = static_cast<unsigned>(d - g.degree());
        steps.push_back({k, *q, shift});
        r = r - poly_mul(UniPoly::monomial(*q, shift), g);
        stepped = true;
      }
    }
    if (stepped) continue;
    // Euclidean shrink of the leading coefficient
    for (std::size_t k = 0; k < gens.size() && !stepped; ++k) {
      const UniPoly& g = gens[k];
      if (g.is_zero() || g.degree() > d) continue;
      auto dm = euclid_divmod(lc, g.leading());
      if (dm && !dm->q.is_zero()) {
        unsigned shift = static_cast<unsigned>(d - g.degree());
        steps.push_back({k, dm->q, shift});
        r = r - poly_mul(UniPoly::monomial(dm->q, shift), g);
        stepped = true;
      }
    }
    if (!stepped) return false;  // leading coefficient is stuck
  }
  return true;
}

}  // namespace

RadicalMemberResult radical_member(const UniPoly& e, const RadTarget& target,
                                   unsigned bound) {
  if (const auto* p = std::get_if<PrimeIdeal>(&target)) {
    // primes are radical: n = 1 decides both ways
    if (member(e, *p))
      return {MemberStatus::Proven, 1,
              MembershipWitness{MembershipWitness::Kind::PrimeMembership, {}, {}}};
    return {MemberStatus::RefutedPrime, 0, std::nullopt};
  }
  const auto& pres = std::get<IdealPresentation>(target);
  std::vector<UniPoly> gens;
  for (const auto& g : pres.gens)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) {
    // the zero ideal of a domain: decisive
    if (e.is_zero())
      return {MemberStatus::Proven, 1,
              MembershipWitness{MembershipWitness::Kind::Transcript, {}, {}}};
    return {MemberStatus::RefutedPrime, 0, std::nullopt};
  }
  UniPoly pw = e;
  for (unsigned n = 1; n <= bound; ++n) {
    if (n > 1) pw = poly_mul(pw, e);
    if (gens.size() == 1) {
      if (auto q = try_div_exact(pw, gens[0]))
        return {MemberStatus::Proven, n,
                MembershipWitness{MembershipWitness::Kind::Quotient, *q, {}}};
    } else {
      std::vector<ReductionStep> steps;
      if (reduce_to_zero(pw, gens, steps))
        return {MemberStatus::Proven, n,
                MembershipWitness{MembershipWitness::Kind::Transcript, {}, steps}};
    }
  }
  return {MemberStatus::NotProvenAtBound, 0, std::nullopt};
}

bool replay_membership(const UniPoly& e, unsigned n, const MembershipWitness& w,
                       const RadTarget& target) {
  switch (w.kind) {
    case MembershipWitness::Kind::PrimeMembership: {
      const auto* p = std::get_if<PrimeIdeal>(&target);
      return p && member(e, *p);
    }
    case MembershipWitness::Kind::Quotient: {
      const auto* pres = std::get_if<IdealPresentation>(&target);
      if (!pres || !w.quotient) return false;
      std::vector<UniPoly> gens;
      for (const auto& g : pres->gens)
        if (!g.is_zero()) gens.push_back(g);
      if (gens.size() != 1) return false;
      return poly_pow(e, n) == poly_mul(*w.quotient, gens[0]);
    }
    case MembershipWitness::Kind::Transcript: {
      const auto* pres = std::get_if<IdealPresentation>(&target);
      if (!pres) return false;
      std::vector<UniPoly> gens;
      for (const auto& g : pres->gens)
        if (!g.is_zero()) gens.push_back(g);
      return apply_steps(poly_pow(e, n), w.steps, gens).is_zero();
    }
  }
  return false;
}

std::vector<UniPoly> outward_test_set(const PrimeIdeal& target, std::string& note) {
  note.clear();
  struct V {
    const PrimeIdeal& p;
    std::string& note;
    std::vector<UniPoly> operator()(const ZeroShape&) const { return {}; }
    std::vector<UniPoly> operator()(const ExtendedBase& s) const {
      return {UniPoly::constant(s.a)};
    }
    std::vector<UniPoly> operator()(const ContractionZero& s) const { return {s.f}; }
    std::vector<UniPoly> operator()(const MaximalPair& s) const {
      return {UniPoly::constant(s.a), s.f};
    }
    std::vector<UniPoly> operator()(const KernelShape& s) const {
      const RingSpec& R = p.base();
      const RingElement& a = s.h.image_of_x;
      if (a.ring() == R) {
        // X - a is an honest generator set
        return {poly_sub(UniPoly::x(R), UniPoly::constant(a))};
      }
      if (R.kind() == RingKind::MonomialSubring) {
        auto nd = normalization_of(R);
        if (auto lifted = lift(nd, a))
          return {poly_sub(UniPoly::x(R), UniPoly::constant(*lifted))};
        // designated finite test set for ker(X -> t): the image's square and
        // cube land back in the subring
        RingElement a2 = a * a;
        RingElement a3 = a2 * a;
        auto l2 = lift(nd, a2);
        auto l3 = lift(nd, a3);
        if (!l2 || !l3)
          fail(Errc::UnsupportedIdealShape,
               "no designated test set for this evaluation kernel");
        note =
            "outward direction checked on the designated test set "
            "{X^2 - a^2, X^3 - a^3}; membership of this set plus primality of "
            "the certificate generator settles equality at this scale";
        UniPoly X = UniPoly::x(R);
        return {poly_sub(poly_pow(X, 2), UniPoly::constant(*l2)),
                poly_sub(poly_pow(X, 3), UniPoly::constant(*l3))};
      }
      fail(Errc::UnsupportedIdealShape, "no test set for this kernel's base ring");
    }
    std::vector<UniPoly> operator()(const QuadPrimeShape& s) const {
      RingSpec R = RingSpec::quadratic_order(s.q.d());
      std::vector<UniPoly> out;
      for (const auto& v : s.q.lattice_basis())
        out.push_back(UniPoly::constant(RingElement::quad(R, v.u, v.v)));
      return out;
    }
  };
  return std::visit(V{target, note}, target.shape());
}

RadicalProof rad_equal_check(const PrimeIdeal& target,
                             const std::vector<UniPoly>& gens,
                             const std::vector<unsigned>& exponent_hints,
                             const Config& cfg) {
  RadicalProof proof;
  unsigned bound = cfg.radical_bound;
  for (unsigned h : exponent_hints) bound = std::max(bound, h);
  proof.bound_used = bound;

  if (gens.empty() && target.height() != 0)
    fail(Errc::VerificationFailed,
         "empty generator list for a target of height " +
             std::to_string(target.height()));

  // inward: generators lie in the (radical) target
  for (const auto& g : gens) {
    if (!member(g, target))
      fail(Errc::VerificationFailed,
           "inward: generator " + to_string(g) + " is not in " + target.describe());
    proof.inward.push_back(
        {to_string(g), g, 1,
         MembershipWitness{MembershipWitness::Kind::PrimeMembership, {}, {}}});
  }

  // outward: each designated target element has a power in (gens)
  std::string note;
  std::vector<UniPoly> test_set = outward_test_set(target, note);
  proof.test_set_note = note;
  IdealPresentation pres{target.base(), target.in_poly_ring(), gens};
  for (const auto& x : test_set) {
    RadicalMemberResult rm = radical_member(x, RadTarget{pres}, bound);
    if (rm.status == MemberStatus::Proven) {
      proof.outward.push_back({to_string(x), x, rm.n, *rm.witness});
      continue;
    }
    if (rm.status == MemberStatus::RefutedPrime)
      fail(Errc::VerificationFailed,
           "outward: " + to_string(x) + " can never enter the zero ideal");
    fail(Errc::NotProvenAtBound,
         "outward: no power of " + to_string(x) + " within exponent bound " +
             std::to_string(bound) + " found in the certificate ideal");
  }
  return proof;
}

bool replay_proof(const RadicalProof& proof, const PrimeIdeal& target,
                  const std::vector<UniPoly>& gens) {
  for (const auto& rec : proof.inward)
    if (!replay_membership(rec.value, rec.n, rec.witness, RadTarget{target}))
      return false;
  IdealPresentation pres{target.base(), target.in_poly_ring(), gens};
  for (const auto& rec : proof.outward)
    if (!replay_membership(rec.value, rec.n, rec.witness, RadTarget{pres}))
      return false;
  // the outward records must cover the whole designated test set
  std::string note;
  std::vector<UniPoly> test_set = outward_test_set(target, note);
  if (test_set.size() != proof.outward.size()) return false;
  for (std::size_t i = 0; i < test_set.size(); ++i)
    if (!(test_set[i] == proof.outward[i].value)) return false;
  return true;
}

}  // namespace stci
