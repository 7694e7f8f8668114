#pragma once

#include "qdepth/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qdepth {

struct SymmetryViolation {
    std::size_t k = 0;
    BigInt sum; // beta_k^d + beta_(d-k)^d, nonzero
};

struct SymmetryCheck {
    std::size_t d = 0;
    bool holds = false;
    std::vector<SymmetryViolation> violations; // one per k <= d/2 with nonzero sum
};

struct CISymmetryReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<uint32_t> degs;
    bool full_support = false; // sum of degrees equals n
    BigInt endpoint;           // beta_{n-m+1}^{n-m+1} of the quotient
    std::vector<SymmetryCheck> checks;
    bool all_hold = false;
};

// Antisymmetry scan for the quotient by a complete intersection of m
// squarefree monomials with pairwise disjoint supports and the given degrees.
// Checks beta_k^d + beta_(d-k)^d = 0 at d = n - m + 1 and d = n + m - 1
// (one check when they coincide), or only at d_override when given.
//
// The endpoint beta_{n-m+1}^{n-m+1} is also computed; it equals -1 exactly
// when the supports fill the ring and 0 otherwise, and the implementation
// asserts that dichotomy.
CISymmetryReport ci_symmetry(std::size_t n, std::vector<uint32_t> degs,
                             std::optional<std::size_t> d_override = std::nullopt);

struct CIQDepthCheck {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<uint32_t> degs;
    long long value = 0;
    long long expected = 0; // n - m
};

// qdepth of the same quotient, which must come out to n - m; a different
// value is a logic error.
CIQDepthCheck ci_qdepth_check(std::size_t n, std::vector<uint32_t> degs);

} // namespace qdepth
