#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tiltgait {

// Newton failed to produce any root (solve) or lost a sample (continuation).
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what,
                         std::size_t sample = static_cast<std::size_t>(-1))
      : std::runtime_error(what), sample_index(sample) {}
  std::size_t sample_index;
};

// Nearest-root matching moved further than the branch match radius.
struct BranchJump : std::runtime_error {
  BranchJump(const std::string& what, std::size_t sample, double jump_rad)
      : std::runtime_error(what), sample_index(sample), jump(jump_rad) {}
  std::size_t sample_index;
  double jump;
};

// Path samples are spaced wider than the adjacency granularity; the
// validator refuses to certify such a path.
struct PathTooCoarse : std::runtime_error {
  PathTooCoarse(const std::string& what, std::size_t sample)
      : std::runtime_error(what), sample_index(sample) {}
  std::size_t sample_index;
};

// The requested branch/color has no root at some path sample.
struct BranchUnavailable : std::runtime_error {
  explicit BranchUnavailable(const std::string& what,
                             std::size_t sample = static_cast<std::size_t>(-1))
      : std::runtime_error(what), sample_index(sample) {}
  std::size_t sample_index;
};

}  // namespace tiltgait
