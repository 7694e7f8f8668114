#include "qdepth/alpha.hpp"

#include "qdepth/errors.hpp"

#include <functional>
#include <string>

namespace qdepth {

namespace {

const BigInt kZero = 0;

// Signed subset counts bucketed by d_T: walking the generator subsets once
// and spending BigInt work only on the n+1 buckets keeps inclusion-exclusion
// cheap even with ~20 generators.
std::vector<long long> signedCountsBySupport(const std::vector<uint64_t>& supports, std::size_t n) {
    std::vector<long long> bucket(n + 1, 0);
    // Depth-first over include/exclude per generator; no 2^m side table.
    std::function<void(std::size_t, uint64_t, int)> walk =
        [&](std::size_t i, uint64_t acc, int parity) {
            if (i == supports.size()) {
                if (acc != 0 || parity != 0) { // skip the empty subset
                    const auto d = static_cast<std::size_t>(__builtin_popcountll(acc));
                    bucket[d] += (parity & 1) ? 1 : -1;
                }
                return;
            }
            walk(i + 1, acc, parity);
            walk(i + 1, acc | supports[i], parity + 1);
        };
    walk(0, 0, 0);
    return bucket;
}

// Folds the buckets into alpha_k(I) = sum_d bucket[d] * C(n-d, k-d). A unit
// generator puts weight on d = 0 and correctly yields alpha_k = C(n, k).
AlphaVector idealAlphaFromBuckets(const std::vector<long long>& bucket, std::size_t n) {
    AlphaVector a(n);
    for (std::size_t d = 0; d <= n; ++d) {
        if (bucket[d] == 0)
            continue;
        for (std::size_t k = d; k <= n; ++k)
            a.counts[k] += BigInt(bucket[d]) * binomial(static_cast<long long>(n - d),
                                                        static_cast<long long>(k - d));
    }
    return a;
}

AlphaVector complementAgainstFullLattice(AlphaVector idealAlpha) {
    for (std::size_t k = 0; k <= idealAlpha.n; ++k)
        idealAlpha.counts[k] = binomial(static_cast<long long>(idealAlpha.n),
                                        static_cast<long long>(k)) -
                               idealAlpha.counts[k];
    return idealAlpha;
}

} // namespace

const BigInt& AlphaVector::at_or_zero(std::size_t k) const {
    return k < counts.size() ? counts[k] : kZero;
}

BigInt AlphaVector::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts)
        t += c;
    return t;
}

std::size_t AlphaVector::min_support() const {
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k] != 0)
            return k;
    throw DomainError("empty poset has no support");
}

std::size_t AlphaVector::max_support() const {
    for (std::size_t k = counts.size(); k-- > 0;)
        if (counts[k] != 0)
            return k;
    throw DomainError("empty poset has no support");
}

AlphaVector alpha_vector(const SubsetPoset& poset) {
    AlphaVector a(poset.n);
    for (std::size_t k = 0; k <= poset.n; ++k)
        a.counts[k] = BigInt(poset.card_begin[k + 1] - poset.card_begin[k]);
    return a;
}

AlphaVector alpha_by_inclusion_exclusion(const MonomialIdeal& I, ModuleMode mode,
                                         const Limits& limits) {
    if (!I.is_squarefree())
        throw DomainError("inclusion-exclusion alpha needs a squarefree ideal; polarize first");
    const std::size_t n = I.nvars();
    if (n > kMaxPosetVars)
        throw DomainError("ambient size must be at most " + std::to_string(kMaxPosetVars));
    if (I.generator_count() > limits.incl_excl_gen_cap)
        throw CapError("inclusion-exclusion over 2^" + std::to_string(I.generator_count()) +
                       " generator subsets exceeds the cap of m = " +
                       std::to_string(limits.incl_excl_gen_cap));

    std::vector<uint64_t> supports;
    supports.reserve(I.generator_count());
    for (const Monomial& g : I.generators())
        supports.push_back(g.support_mask());

    AlphaVector ideal = idealAlphaFromBuckets(signedCountsBySupport(supports, n), n);
    return mode == ModuleMode::ideal ? ideal : complementAgainstFullLattice(std::move(ideal));
}

AlphaVector alpha_quotient_pair(const MonomialIdeal& J, const MonomialIdeal& I,
                                const Limits& limits) {
    if (J.nvars() != I.nvars())
        throw DomainError("ideals live in different rings");
    const AlphaVector over_I = alpha_by_inclusion_exclusion(I, ModuleMode::quotient, limits);
    const AlphaVector over_J = alpha_by_inclusion_exclusion(J, ModuleMode::quotient, limits);
    AlphaVector out(J.nvars());
    for (std::size_t k = 0; k <= out.n; ++k) {
        out.counts[k] = over_I.counts[k] - over_J.counts[k];
        if (out.counts[k] < 0)
            throw DomainError("negative alpha entry: I is not contained in J");
    }
    return out;
}

AlphaVector alpha_ci(std::size_t n, const std::vector<uint32_t>& degs, ModuleMode mode) {
    if (n < 1)
        throw DomainError("ambient ring needs at least one variable");
    if (degs.empty())
        throw DomainError("a complete intersection needs at least one generator");
    uint64_t total = 0;
    for (uint32_t d : degs) {
        if (d < 1)
            throw DomainError("generator degrees must be at least 1");
        total += d;
    }
    if (total > n)
        throw DomainError("generator degrees sum to " + std::to_string(total) +
                          " > n = " + std::to_string(n) + "; no squarefree CI fits");

    // Disjoint supports make d_T a plain subset sum.
    std::vector<long long> bucket(n + 1, 0);
    std::function<void(std::size_t, uint64_t, int)> walk =
        [&](std::size_t i, uint64_t acc, int parity) {
            if (i == degs.size()) {
                if (parity != 0)
                    bucket[static_cast<std::size_t>(acc)] += (parity & 1) ? 1 : -1;
                return;
            }
            walk(i + 1, acc, parity);
            walk(i + 1, acc + degs[i], parity + 1);
        };
    if (degs.size() > 24)
        throw CapError("more than 2^24 generator subsets in the CI expansion");
    walk(0, 0, 0);

    AlphaVector ideal = idealAlphaFromBuckets(bucket, n);
    return mode == ModuleMode::ideal ? ideal : complementAgainstFullLattice(std::move(ideal));
}

} // namespace qdepth
