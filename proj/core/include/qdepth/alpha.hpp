#pragma once

#include "qdepth/bigint.hpp"
#include "qdepth/ideal.hpp"
#include "qdepth/limits.hpp"
#include "qdepth/poset.hpp"

#include <vector>

namespace qdepth {

// alpha_k = number of poset members of cardinality k, for k = 0..n. Reads
// beyond n return 0: beta tables at level d > n rely on that zero-extension.
struct AlphaVector {
    std::size_t n = 0;
    std::vector<BigInt> counts; // size n+1

    AlphaVector() = default;
    explicit AlphaVector(std::size_t n_) : n(n_), counts(n_ + 1) {}

    const BigInt& at_or_zero(std::size_t k) const;

    BigInt total() const;
    bool is_empty_poset() const { return total() == 0; }

    // Least/greatest k with alpha_k > 0; DomainError when all entries vanish.
    std::size_t min_support() const;
    std::size_t max_support() const;
};

enum class ModuleMode { quotient, ideal };

AlphaVector alpha_vector(const SubsetPoset& poset);

// alpha of I (ideal mode) or S/I (quotient mode) by inclusion-exclusion over
// nonempty generator subsets: alpha_k(I) = sum (-1)^(|T|-1) C(n - d_T, k - d_T)
// with d_T the support size of lcm over T. Requires I squarefree; walks 2^m
// subsets, so the generator count is capped by limits.incl_excl_gen_cap.
AlphaVector alpha_by_inclusion_exclusion(const MonomialIdeal& I, ModuleMode mode,
                                         const Limits& limits = {});

// alpha of J/I as alpha(S/I) - alpha(S/J), both by inclusion-exclusion.
// A negative entry means I was not contained in J.
AlphaVector alpha_quotient_pair(const MonomialIdeal& J, const MonomialIdeal& I,
                                const Limits& limits = {});

// alpha for a squarefree complete intersection with generator degrees degs
// (pairwise disjoint supports, sum degs <= n): the inclusion-exclusion
// collapses to subset sums d_T = sum_{j in T} degs[j].
AlphaVector alpha_ci(std::size_t n, const std::vector<uint32_t>& degs, ModuleMode mode);

} // namespace qdepth
