#pragma once

#include "qdepth/ideal.hpp"

#include <cstdint>
#include <vector>

namespace qdepth {

// One polarization variable: the j-th copy (j >= 2) of original variable
// x_original lands at position index (1-based) in the polarized ring.
struct VariableReplica {
    std::size_t original = 0;
    uint32_t copy = 0;
    std::size_t index = 0;
};

struct PolarizationResult {
    MonomialIdeal ideal;                 // squarefree, in nvars()+added variables
    std::size_t added = 0;               // N = sum_i max(0, g_i - 1)
    std::vector<VariableReplica> var_map; // ordered by (original, copy)
};

struct PolarizedPair {
    MonomialIdeal lower;                  // I polarized
    MonomialIdeal upper;                  // J polarized
    std::size_t added = 0;
    std::vector<VariableReplica> var_map;
};

// Polarization against g = exponent-wise lcm of the generators:
// x_i^{a_i} contributes x_i * x_{i,2} * ... * x_{i,a_i}. Replica variables are
// appended after x_n in (original, copy) order. Squarefree ideals (g_i <= 1)
// pass through unchanged with added = 0; so do the zero and unit ideals.
PolarizationResult polarize(const MonomialIdeal& ideal);

// Quotients J/I must polarize both ideals against the joint g taken over
// G(I) u G(J); polarizing the two sides separately would misalign replicas.
PolarizedPair polarize_pair(const MonomialIdeal& I, const MonomialIdeal& J);

} // namespace qdepth
