#pragma once

#include "logcy/periods.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace logcy {

/// Random nonzero element of Q(i) with small numerators and denominators.
GaussianRational random_unit(std::mt19937_64& rng);
/// Random marking point on every edge.
Marking random_marking(const DualComplex& complex, std::mt19937_64& rng);
std::vector<GaussianRational> random_lambdas(std::size_t n, std::mt19937_64& rng);

/// Randomized checks of the period invariants on one pair.
struct PropertySuiteResult {
  std::uint64_t seed = 0;
  int trials = 0;
  bool marking_independent = true;  // unmarked period does not depend on the marking
  bool torsor_identity = true;      // theta(a) . phi_m == phi_{a.m}
  bool k_trivial = true;            // unmarked period is 1 on the image of Pic(Y)
  std::string first_failure;

  bool ok() const { return marking_independent && torsor_identity && k_trivial; }
};

PropertySuiteResult run_property_suite(const LogCY3Pair& p, std::uint64_t seed, int trials);

}  // namespace logcy
