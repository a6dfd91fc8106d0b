#pragma once

namespace stci {

// Tunable bounds. Everything is exact arithmetic; these only cap searches.
struct Config {
  unsigned radical_bound = 64;        // global exponent cap for radical membership
  unsigned n_check = 16;              // exhaustive range for the normality obstruction
  unsigned torsion_bound = 12;        // class-number bound for torsion witnesses
  unsigned descent_bound = 64;        // power search in constant descent
  unsigned max_input_degree = 64;     // degree cap on parsed polynomials
  unsigned factor_degree_bound = 64;  // trial-factorization degree cap
  unsigned long long oracle_budget = 1ull << 21;  // enumeration budget
  unsigned long seed = 0;             // seed for randomized test drivers
};

}  // namespace stci
