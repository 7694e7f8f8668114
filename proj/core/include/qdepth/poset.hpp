#pragma once

#include "qdepth/ideal.hpp"
#include "qdepth/limits.hpp"

#include <cstdint>
#include <vector>

namespace qdepth {

// A set of subsets of [n], each a bitmask (bit i-1 for i). Members are
// distinct and sorted by (cardinality, mask value); card_begin[k] indexes the
// first member of cardinality k, so the block of cardinality-k members is
// members[card_begin[k] .. card_begin[k+1]).
struct SubsetPoset {
    std::size_t n = 0;
    std::vector<uint64_t> members;
    std::vector<std::size_t> card_begin; // size n+2

    std::size_t size() const { return members.size(); }
    bool contains(uint64_t mask) const { return index_of(mask) >= 0; }

    // Index into members, or -1 when absent.
    std::ptrdiff_t index_of(uint64_t mask) const;
};

// Normalizes a member list into a SubsetPoset. Throws on duplicates, masks
// outside [n], or n > 62.
SubsetPoset make_poset(std::size_t n, std::vector<uint64_t> members);

// The characteristic poset of J/I: all C subseteq [n] with x_C in J \ I.
// Both ideals must be squarefree (polarize first otherwise) with I contained
// in J; the 2^n enumeration refuses above limits.enum_cap.
SubsetPoset build_poset(const MonomialIdeal& J, const MonomialIdeal& I, const Limits& limits = {});

} // namespace qdepth
