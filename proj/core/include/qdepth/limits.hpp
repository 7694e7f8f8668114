#pragma once

#include <cstddef>

namespace qdepth {

// Bitmask subsets live in one machine word; two bits are reserved so that
// (1 << n) and related arithmetic never overflow.
inline constexpr std::size_t kMaxPosetVars = 62;

struct Limits {
    // build_poset iterates all 2^n subsets up to this many variables and
    // refuses beyond it. The CLI lets QDEPTH_MAX_N raise it (at most 62).
    std::size_t enum_cap = 24;

    // The exhaustive partition search refuses above this ambient size.
    std::size_t sdepth_cap = 10;

    // Inclusion-exclusion walks 2^m generator subsets up to this many
    // generators.
    std::size_t incl_excl_gen_cap = 22;
};

} // namespace qdepth
