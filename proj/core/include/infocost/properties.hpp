#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace infocost {

struct PropertyResult {
  std::string suite;
  std::string name;
  int trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int trials = 1000;
  // Test hook: run the monotonicity property with beta_01 = -1 and every
  // other coefficient zero. The property must then fail.
  bool inject_negative_beta = false;
};

/// KL divergence invariants and the cost axioms: product additivity,
/// dilution linearity, invariance under column splitting, Blackwell
/// monotonicity under garbling, and the posterior-separable representation.
std::vector<PropertyResult> run_axiom_suite(const CheckOptions& opts);

/// Admissibility of LLR distributions, moment/cumulant conversions,
/// cumulant additivity under convolution, and agreement of LLR moments
/// with direct expectations over signals.
std::vector<PropertyResult> run_appendix_suite(const CheckOptions& opts);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace infocost
