#pragma once

#include <cstdint>
#include <random>

#include "transcert/rational.hpp"

namespace transcert {

/// Seeded generator with platform-independent range mapping. The standard
/// distributions are implementation-defined, which would break byte-identical
/// output across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at our ranges.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  Integer uniform_integer(std::int64_t lo, std::int64_t hi) { return Integer(static_cast<long>(uniform(lo, hi))); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace transcert
