#include "qdepth/sdepth.hpp"

#include "qdepth/alpha.hpp"
#include "qdepth/beta.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/polarize.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdepth {

namespace {

class PartitionSearch {
public:
    PartitionSearch(const SubsetPoset& poset, std::size_t d, std::vector<BigInt> targets)
        : mPoset(poset),
          mD(d),
          mTargets(std::move(targets)),
          mCovered(poset.size(), 0),
          mMade(d, 0) {}

    bool run(std::vector<Interval>& out) {
        if (!recurse(0)) {
            return false;
        }
        out = mChosen;
        return true;
    }

private:
    // Intervals rooted strictly below size k can no longer be created once
    // the scan has passed all members of those sizes.
    bool countsClosedBelow(std::size_t k) const {
        const std::size_t stop = std::min(k, mD);
        for (std::size_t j = 0; j < stop; ++j) {
            if (mMade[j] != mTargets[j]) {
                return false;
            }
        }
        return true;
    }

    bool recurse(std::size_t from) {
        std::size_t i = from;
        while (i < mPoset.size() && mCovered[i]) {
            ++i;
        }
        if (i == mPoset.size()) {
            return countsClosedBelow(mD);
        }

        const uint64_t c = mPoset.members[i];
        const auto k = static_cast<std::size_t>(std::popcount(c));
        if (k >= mD) {
            // Everything from here on covers itself by a singleton.
            return countsClosedBelow(mD);
        }
        if (!countsClosedBelow(k)) {
            return false;
        }
        if (BigInt(mMade[k]) >= mTargets[k]) {
            // c must root an interval of size-d upper, but the budget for
            // size-k roots is spent.
            return false;
        }

        // A bit can extend c only if the one-step member stays inside the
        // poset and is still free; every member of [c, upper] must be.
        std::vector<int> freeBits;
        for (std::size_t b = 0; b < mPoset.n; ++b) {
            const uint64_t bit = uint64_t(1) << b;
            if (c & bit) {
                continue;
            }
            const auto oneUp = mPoset.index_of(c | bit);
            if (oneUp >= 0 && !mCovered[static_cast<std::size_t>(oneUp)]) {
                freeBits.push_back(static_cast<int>(b));
            }
        }
        const std::size_t need = mD - k;
        if (freeBits.size() < need) {
            return false;
        }

        std::vector<std::size_t> pick(need);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        std::vector<std::size_t> block;
        while (true) {
            uint64_t extension = 0;
            for (const std::size_t p : pick) {
                extension |= uint64_t(1) << freeBits[p];
            }
            if (tryInterval(c, extension, block)) {
                mChosen.push_back(Interval{c, c | extension});
                ++mMade[k];
                if (recurse(i + 1)) {
                    return true;
                }
                --mMade[k];
                mChosen.pop_back();
                for (const std::size_t idx : block) {
                    mCovered[idx] = 0;
                }
            }
            if (!nextCombination(pick, freeBits.size())) {
                break;
            }
        }
        return false;
    }

    // Checks that every member of [c, c | extension] lies in the poset and is
    // uncovered; on success marks them covered and records their indices.
    bool tryInterval(uint64_t c, uint64_t extension, std::vector<std::size_t>& block) {
        block.clear();
        uint64_t sub = extension;
        while (true) {
            const auto idx = mPoset.index_of(c | sub);
            if (idx < 0 || mCovered[static_cast<std::size_t>(idx)]) {
                block.clear();
                return false;
            }
            block.push_back(static_cast<std::size_t>(idx));
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & extension;
        }
        for (const std::size_t idx : block) {
            mCovered[idx] = 1;
        }
        return true;
    }

    static bool nextCombination(std::vector<std::size_t>& pick, std::size_t limit) {
        const std::size_t r = pick.size();
        if (r == 0) {
            return false;
        }
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (pick[i] + (r - i) < limit) {
                ++pick[i];
                for (std::size_t j = i + 1; j < r; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
                return true;
            }
        }
        return false;
    }

    const SubsetPoset& mPoset;
    std::size_t mD;
    std::vector<BigInt> mTargets;
    std::vector<char> mCovered;
    std::vector<long long> mMade;
    std::vector<Interval> mChosen;
};

IntervalPartition assembleWitness(const SubsetPoset& poset,
                                  std::size_t d,
                                  const std::vector<Interval>& chosen) {
    IntervalPartition part;
    part.n = poset.n;
    part.intervals = chosen;
    std::vector<char> covered(poset.size(), 0);
    for (const Interval& iv : chosen) {
        uint64_t ext = iv.upper & ~iv.lower;
        uint64_t sub = ext;
        while (true) {
            const auto idx = poset.index_of(iv.lower | sub);
            if (idx < 0) {
                throw std::logic_error("sdepth witness references a set outside the poset");
            }
            covered[static_cast<std::size_t>(idx)] = 1;
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & ext;
        }
    }
    for (std::size_t i = 0; i < poset.size(); ++i) {
        if (!covered[i]) {
            if (static_cast<std::size_t>(std::popcount(poset.members[i])) < d) {
                throw std::logic_error("sdepth witness leaves a small member uncovered");
            }
            part.intervals.push_back(Interval{poset.members[i], poset.members[i]});
        }
    }
    std::sort(part.intervals.begin(), part.intervals.end(), [](const Interval& a, const Interval& b) {
        const int pa = std::popcount(a.lower);
        const int pb = std::popcount(b.lower);
        if (pa != pb) {
            return pa < pb;
        }
        if (a.lower != b.lower) {
            return a.lower < b.lower;
        }
        return a.upper < b.upper;
    });
    return part;
}

} // namespace

SDepthReport sdepth_poset(const SubsetPoset& poset, std::size_t cap) {
    if (poset.size() == 0) {
        throw DomainError("sdepth of an empty poset is undefined: the module is zero");
    }
    if (poset.n > cap) {
        throw CapError("sdepth search refused: " + std::to_string(poset.n) +
                       " variables exceeds the cap of " + std::to_string(cap));
    }

    const AlphaVector alpha = alpha_vector(poset);
    const std::size_t dMin = alpha.min_support();
    const std::size_t dMax = alpha.max_support();

    for (std::size_t d = dMax;; --d) {
        if (beta_feasible(alpha, d)) {
            const BetaTable bt = beta_table(alpha, d);
            std::vector<BigInt> targets(bt.entries.begin(),
                                        bt.entries.begin() + static_cast<std::ptrdiff_t>(d));
            PartitionSearch search(poset, d, std::move(targets));
            std::vector<Interval> chosen;
            if (search.run(chosen)) {
                SDepthReport report;
                report.value = static_cast<long long>(d);
                report.n_effective = poset.n;
                report.n_added = 0;
                report.witness = assembleWitness(poset, d, chosen);
                return report;
            }
        }
        if (d == dMin) {
            // Singletons alone partition the poset at level dMin.
            throw std::logic_error("sdepth search failed at the minimum support level");
        }
    }
}

SDepthReport sdepth(const MonomialIdeal& J, const MonomialIdeal& I, const Limits& limits) {
    if (!J.contains_ideal(I)) {
        throw DomainError("I is not contained in J");
    }
    const PolarizedPair pair = polarize_pair(I, J);
    const std::size_t nEff = pair.upper.nvars();
    if (nEff > limits.sdepth_cap) {
        throw CapError("sdepth search refused: polarized ring has " + std::to_string(nEff) +
                       " variables, cap is " + std::to_string(limits.sdepth_cap));
    }
    const SubsetPoset poset = build_poset(pair.upper, pair.lower, limits);
    SDepthReport report = sdepth_poset(poset, limits.sdepth_cap);
    report.n_added = pair.added;
    report.value -= static_cast<long long>(pair.added);
    return report;
}

} // namespace qdepth
