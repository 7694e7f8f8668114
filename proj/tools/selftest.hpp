#pragma once

#include "qdepth/limits.hpp"

#include <cstddef>
#include <cstdint>

namespace qdepth::selftest {

// Runs the golden examples and the seeded property suites, printing one
// PASS/FAIL line per check. Returns the number of failing checks.
int run(uint64_t seed, std::size_t samples, const Limits& limits);

} // namespace qdepth::selftest
