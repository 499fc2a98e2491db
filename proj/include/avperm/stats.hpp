#pragma once

#include <cstdint>

namespace avperm {

// Algorithm-internal work counter, reported by the benchmark harness. Each
// solver documents what one step is.
struct SolveStats {
  std::uint64_t steps = 0;
};

}  // namespace avperm
