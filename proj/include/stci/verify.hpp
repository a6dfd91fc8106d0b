#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stci/config.hpp"
#include "stci/ideals.hpp"
#include "stci/poly.hpp"

namespace stci {

// Replayable evidence that some e^n lies in a target ideal.
struct ReductionStep {
  std::size_t gen_index;
  RingElement multiplier;
  unsigned shift;  // X^shift
};
struct MembershipWitness {
  enum class Kind { PrimeMembership, Quotient, Transcript } kind;
  std::optional<UniPoly> quotient;     // e^n = quotient * g
  std::vector<ReductionStep> steps;    // e^n - sum steps = 0
};

enum class MemberStatus { Proven, NotProvenAtBound, RefutedPrime };

struct RadicalMemberResult {
  MemberStatus status;
  unsigned n = 0;
  std::optional<MembershipWitness> witness;
};

using RadTarget = std::variant<PrimeIdeal, IdealPresentation>;

// least n <= bound with e^n in the target; for prime targets membership at
// n = 1 is decisive both ways, for presentations a failed search is only
// "not proven at bound"
RadicalMemberResult radical_member(const UniPoly& e, const RadTarget& target,
                                   unsigned bound);

// re-derives the claimed membership from the witness by plain arithmetic
bool replay_membership(const UniPoly& e, unsigned n, const MembershipWitness& w,
                       const RadTarget& target);

struct DirectionRecord {
  std::string element;  // printed form
  UniPoly value;
  unsigned n;
  MembershipWitness witness;
};

struct RadicalProof {
  std::vector<DirectionRecord> inward;   // generator in target (n = 1)
  std::vector<DirectionRecord> outward;  // target test element^n in (gens)
  unsigned bound_used = 0;
  std::string test_set_note;  // set when a designated kernel test set is used
};

// The finite outward test set standing in for the target's generators.
// KernelShape targets use {X - a} when a lies in the base ring and the
// designated pair {X^2 - a^2, X^3 - a^3} for ker(X -> t); the note records
// the substitution.
std::vector<UniPoly> outward_test_set(const PrimeIdeal& target, std::string& note);

// Both radical inclusions for rad(gens) = target; throws VerificationFailed /
// NotProvenAtBound with the offending generator and direction.
RadicalProof rad_equal_check(const PrimeIdeal& target,
                             const std::vector<UniPoly>& gens,
                             const std::vector<unsigned>& exponent_hints,
                             const Config& cfg);

// full independent replay of a finished proof
bool replay_proof(const RadicalProof& proof, const PrimeIdeal& target,
                  const std::vector<UniPoly>& gens);

// ---------------------------------------------------------------------------
// brute-force oracle: enumerate every polynomial within the caps and compare
// the two radical-membership sets

struct OracleResult {
  bool equal;
  unsigned long long candidates = 0;
  std::optional<UniPoly> counterexample;
};

OracleResult oracle_small(const RadTarget& lhs, const RadTarget& rhs,
                          unsigned degree_cap, const Config& cfg);
// serial reference implementation, kept for testing the parallel scan
OracleResult oracle_small_serial(const RadTarget& lhs, const RadTarget& rhs,
                                 unsigned degree_cap, const Config& cfg);

// exact membership kernel used by the oracle (principal, pair, prime shapes)
bool oracle_member(const UniPoly& e, const RadTarget& t);
bool oracle_rad_member(const UniPoly& e, const RadTarget& t, unsigned degree_cap);

}  // namespace stci
