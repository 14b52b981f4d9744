#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gapnn/synthetic.hpp"

namespace gapnn {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifySettings {
  Family family = Family::box;
  std::uint64_t seed = 0;
  /// 0 means the family default (box: 500 train / 2000 test per class,
  /// shapes: 50 / 200).
  std::size_t train_per_class = 0;
  std::size_t test_per_class = 0;
};

/// Runs the full property suite for one synthetic family: generation
/// determinism, matrix validity, the class gap, metricity expectations,
/// cover validity (family and random datasets), zero training/test error,
/// smooth/nearest-neighbour agreement, the dominance inequality grid, the
/// gap/neighbourhood exclusion law, the score Lipschitz bound, and the
/// pipeline runtime budget. Results come back in execution order; a property
/// that could not run because an earlier stage failed is reported as failed
/// with the stage's error.
std::vector<PropertyResult> run_property_suite(const VerifySettings& settings);

} // namespace gapnn
