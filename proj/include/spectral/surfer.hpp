#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectral/graph.hpp"

namespace spectral {

struct SimConfig {
  std::uint64_t steps = 1'000'000;
  double alpha = 0.85;
  std::uint64_t seed = 42;
  std::optional<std::vector<double>> personalization;
  std::optional<std::vector<double>> dangling;
};

/// Steps walked and discarded before visits are counted.
inline constexpr std::uint64_t burn_in_steps = 1000;

/// Random-surfer simulation: visit frequencies after `steps` counted
/// transitions.
///
/// Each transition follows an out-edge chosen with probability proportional
/// to its weight with probability alpha (jumping by the dangling vector from
/// a dangling node), and otherwise jumps by the personalization vector. The
/// generator is std::mt19937_64 seeded with `seed`; uniform variates take
/// its top 53 bits, so a seed reproduces the same walk on every platform.
ScoreVector simulate(const SparseGraph& g, const SimConfig& cfg);

}  // namespace spectral
