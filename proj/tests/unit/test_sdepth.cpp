#include "qdepth/errors.hpp"
#include "qdepth/parse.hpp"
#include "qdepth/qdepth.hpp"
#include "qdepth/random_instances.hpp"
#include "qdepth/sdepth.hpp"
#include "qdepth/veronese.hpp"

#include <doctest.h>

#include <bit>
#include <vector>

using namespace qdepth;

namespace {

// Reference search, straight from the definition: partition the poset into
// intervals [C, D] with every |D| >= d, trying every poset member D above C.
// No level normalization, no counting prunes; usable up to n = 5 or so.
class NaiveSearch {
public:
    explicit NaiveSearch(const SubsetPoset& poset)
        : mPoset(poset), mCovered(poset.size(), false) {}

    bool feasible(std::size_t d) {
        mD = d;
        std::fill(mCovered.begin(), mCovered.end(), false);
        return recurse();
    }

private:
    bool recurse() {
        std::size_t from = 0;
        while (from < mPoset.size() && mCovered[from])
            ++from;
        if (from == mPoset.size())
            return true;
        const uint64_t lower = mPoset.members[from];

        for (std::size_t j = 0; j < mPoset.size(); ++j) {
            const uint64_t upper = mPoset.members[j];
            if (static_cast<std::size_t>(std::popcount(upper)) < mD)
                continue;
            if ((lower & upper) != lower)
                continue;
            if (!intervalFree(lower, upper))
                continue;
            mark(lower, upper, true);
            if (recurse())
                return true;
            mark(lower, upper, false);
        }
        return false;
    }

    bool intervalFree(uint64_t lower, uint64_t upper) const {
        const uint64_t extra = upper & ~lower;
        uint64_t sub = extra;
        while (true) {
            const std::ptrdiff_t idx = mPoset.index_of(lower | sub);
            if (idx < 0 || mCovered[static_cast<std::size_t>(idx)])
                return false;
            if (sub == 0)
                break;
            sub = (sub - 1) & extra;
        }
        return true;
    }

    void mark(uint64_t lower, uint64_t upper, bool value) {
        const uint64_t extra = upper & ~lower;
        uint64_t sub = extra;
        while (true) {
            mCovered[static_cast<std::size_t>(mPoset.index_of(lower | sub))] = value;
            if (sub == 0)
                break;
            sub = (sub - 1) & extra;
        }
    }

    const SubsetPoset& mPoset;
    std::size_t mD = 0;
    std::vector<bool> mCovered;
};

long long naive_sdepth(const SubsetPoset& poset) {
    NaiveSearch search(poset);
    std::size_t top = 0;
    for (uint64_t m : poset.members)
        top = std::max<std::size_t>(top, static_cast<std::size_t>(std::popcount(m)));
    for (std::size_t d = top + 1; d-- > 0;)
        if (search.feasible(d))
            return static_cast<long long>(d);
    return -1;
}

// The witness must partition the poset exactly, with every upper endpoint of
// size at least the reported depth.
void validatePartition(const SDepthReport& report, const SubsetPoset& poset) {
    const auto d = report.value + static_cast<long long>(report.n_added);
    std::vector<bool> covered(poset.size(), false);
    std::size_t total = 0;
    for (const Interval& iv : report.witness.intervals) {
        REQUIRE((iv.lower & iv.upper) == iv.lower);
        CHECK(std::popcount(iv.upper) >= d);
        const uint64_t extra = iv.upper & ~iv.lower;
        uint64_t sub = extra;
        while (true) {
            const std::ptrdiff_t idx = poset.index_of(iv.lower | sub);
            REQUIRE(idx >= 0);
            REQUIRE_FALSE(covered[static_cast<std::size_t>(idx)]);
            covered[static_cast<std::size_t>(idx)] = true;
            ++total;
            if (sub == 0)
                break;
            sub = (sub - 1) & extra;
        }
    }
    CHECK(total == poset.size());
}

} // namespace

TEST_CASE("full lattices and points") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const SubsetPoset full = build_poset(MonomialIdeal::unit(n), MonomialIdeal::zero(n));
        const SDepthReport r = sdepth_poset(full);
        CHECK(r.value == static_cast<long long>(n));
        CHECK(r.witness.intervals.size() == 1);
        validatePartition(r, full);
        CHECK(naive_sdepth(full) == r.value);
    }

    const SubsetPoset point = make_poset(3, {uint64_t(0)});
    CHECK(sdepth_poset(point).value == 0);
    CHECK(naive_sdepth(point) == 0);
}

TEST_CASE("maximal ideal reaches ceil(n/2)") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<Monomial> vars;
        for (std::size_t i = 1; i <= n; ++i)
            vars.push_back(Monomial::variable(n, i));
        const MonomialIdeal maximal(n, std::move(vars));
        const SubsetPoset poset = build_poset(maximal, MonomialIdeal::zero(n));
        const SDepthReport r = sdepth_poset(poset);
        CHECK(r.value == static_cast<long long>((n + 1) / 2));
        validatePartition(r, poset);
        CHECK(naive_sdepth(poset) == r.value);
    }
}

TEST_CASE("search agrees with the naive reference on random posets") {
    Rng rng(20260819);
    int done = 0;
    while (done < 30) {
        const std::size_t n = 2 + draw_index(rng, 4); // 2..5
        const IdealPair pair = random_nested_squarefree_pair(rng, n, 3);
        const SubsetPoset poset = build_poset(pair.upper, pair.lower);
        if (poset.size() == 0)
            continue;
        const SDepthReport r = sdepth_poset(poset);
        CHECK(r.value == naive_sdepth(poset));
        validatePartition(r, poset);
        ++done;
    }
}

TEST_CASE("Veronese posets") {
    const SubsetPoset v42 =
        build_poset(veronese_ideal(4, 2), MonomialIdeal::zero(4));
    const SDepthReport r42 = sdepth_poset(v42);
    CHECK(r42.value == naive_sdepth(v42));
    validatePartition(r42, v42);

    const SubsetPoset v53 = build_poset(veronese_ideal(5, 3), MonomialIdeal::zero(5));
    const SDepthReport r53 = sdepth_poset(v53);
    CHECK(r53.value == naive_sdepth(v53));
    validatePartition(r53, v53);
}

TEST_CASE("six-generator block ideal in eight variables") {
    // Strictly below its quasi depth of 6: the interval partition tops out
    // one level earlier.
    const MonomialIdeal I = parse_ideal("x1, x2, x3, x4, x5*x6, x7*x8", 8);
    const SubsetPoset poset = build_poset(I, MonomialIdeal::zero(8));
    CHECK(poset.size() == 247);
    const SDepthReport r = sdepth_poset(poset);
    CHECK(r.value == 5);
    validatePartition(r, poset);
}

TEST_CASE("pipeline handles polarization and caps") {
    const SDepthReport mixed = sdepth(MonomialIdeal::unit(2), parse_ideal("x1^2, x1*x2^2", 2));
    CHECK(mixed.value == 0);
    CHECK(mixed.n_added == 2);
    CHECK(mixed.n_effective == 4);

    Limits tight;
    tight.sdepth_cap = 3;
    CHECK_THROWS_AS(sdepth(MonomialIdeal::unit(4), parse_ideal("x1*x2", 4), tight), CapError);

    const MonomialIdeal I = parse_ideal("x1", 2);
    CHECK_THROWS_AS(sdepth(I, I), DomainError);
}

TEST_CASE("Stanley depth never exceeds quasi depth") {
    Rng rng(5150);
    int done = 0;
    while (done < 25) {
        const std::size_t n = 2 + draw_index(rng, 4);
        const IdealPair pair = random_nested_squarefree_pair(rng, n, 3);
        try {
            const SDepthReport s = sdepth(pair.upper, pair.lower);
            const QDepthReport q = qdepth::qdepth(pair.upper, pair.lower);
            CHECK(s.value <= q.value);
            ++done;
        } catch (const DomainError&) {
            // zero module drawn; try another
        }
    }
}
