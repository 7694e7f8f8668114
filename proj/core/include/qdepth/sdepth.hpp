#pragma once

#include "qdepth/limits.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/qdepth.hpp"

#include <cstdint>
#include <vector>

namespace qdepth {

// [lower, upper] = { A : lower subseteq A subseteq upper }, as bitmasks.
struct Interval {
    uint64_t lower = 0;
    uint64_t upper = 0;
};

struct IntervalPartition {
    std::size_t n = 0;
    std::vector<Interval> intervals;
};

struct SDepthReport {
    long long value = 0; // after subtracting n_added
    std::size_t n_effective = 0;
    std::size_t n_added = 0;
    // A partition of the (polarized) poset into intervals whose upper
    // endpoints all have size >= value + n_added. Indices refer to the
    // polarized ring when n_added > 0.
    IntervalPartition witness;
};

// Stanley depth of a poset by exhaustive search: the largest d admitting an
// interval partition with every |upper| >= d.
//
// Levels are tried from max |A| downward. A level is skipped outright unless
// all beta_k^d >= 0, and during the search the number of intervals rooted at
// each size k < d must hit beta_k^d exactly; both facts follow from counting
// members of a normalized partition (intervals rooted below level d take
// uppers of size exactly d, which loses nothing: an interval reaching higher
// splits inside the poset into one of size d plus intervals rooted higher).
// The backtracking itself processes the least uncovered member first; that
// member must be the lower endpoint of its interval.
SDepthReport sdepth_poset(const SubsetPoset& poset, std::size_t cap = 10);

// Stanley depth of J/I: polarize the pair jointly, search the characteristic
// poset, subtract the added variable count. Refuses when the polarized
// ambient exceeds limits.sdepth_cap.
SDepthReport sdepth(const MonomialIdeal& J, const MonomialIdeal& I, const Limits& limits = {});

} // namespace qdepth
