#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "convexkernel/moduli.hpp"
#include "convexkernel/rng.hpp"
#include "convexkernel/witnesses.hpp"

namespace ck {

// Seeded property sweeps shared by the `verify` CLI subcommand and the
// acceptance suite. Every sweep is deterministic for a fixed seed.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long long cases = 0;
  long long violations = 0;
  long long skipped = 0;
  std::string note;
};

std::vector<Rational> default_lemma1_epsilons();  // 1/4, 1/2, 1, 3/2
std::vector<Rational> default_lemma3_epsilons();  // 1/4, 1/2

// Exact rational unit vector (circle / sphere rational parametrization).
std::vector<Rational> rational_unit_vector(SampleRng& rng, int dim);

// Random (c, r, u, v) in R^2 and R^3 with the extended-modulus premises held
// at rational margin 2^-10, checked through midpoint_bound_check at
// precision k. A sound implementation produces zero Violated verdicts.
SuiteReport lemma1_soundness_sweep(std::uint64_t seed, int samples_per_cell,
                                   const std::vector<Rational>& epsilons = default_lemma1_epsilons(),
                                   int k = 16);

// Near-osculating ball pairs with 1/2 <= rho <= 2 and |r+s-rho| < delta from
// intersection_delta; common points are rejection-sampled exactly (rational
// membership) and pair distances are checked against epsilon both exactly
// and through diameter_bound_check at precision k.
SuiteReport lemma3_soundness_sweep(std::uint64_t seed, int configs_per_eps,
                                   const std::vector<Rational>& epsilons = default_lemma3_epsilons(),
                                   int k = 12);

// ||z - x|| = lambda and ||z - y|| = mu at k in {8, 16, 32} for random
// configurations across R^1/R^2/R^3 x {P1, P2}.
SuiteReport metric_exactness_sweep(std::uint64_t seed, int configs);

// Pairwise modulus soundness of metric_point's output stream under
// adversarial rho with the given commitment stages, to precision max_k.
SuiteReport adversarial_modulus_sweep(const std::vector<int>& stages = {4, 16, 40},
                                      int max_k = 64);

// Kernel laws: pairwise modulus on random expressions, ring laws at
// precision, plus_part + minus_part = |x|, dichotomy / pos_or_small
// soundness on exact rational inputs. cases_per_law cases for each of the
// five laws.
SuiteReport kernel_laws_sweep(std::uint64_t seed, int cases_per_law);

}  // namespace ck
