#include "qdepth/poset.hpp"

#include "qdepth/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace qdepth {

namespace {

bool cardValueLess(uint64_t a, uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb)
        return ca < cb;
    return a < b;
}

std::vector<std::size_t> buildCardIndex(std::size_t n, const std::vector<uint64_t>& members) {
    std::vector<std::size_t> begin(n + 2, 0);
    for (uint64_t m : members)
        ++begin[static_cast<std::size_t>(std::popcount(m)) + 1];
    for (std::size_t k = 1; k < begin.size(); ++k)
        begin[k] += begin[k - 1];
    return begin;
}

} // namespace

std::ptrdiff_t SubsetPoset::index_of(uint64_t mask) const {
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    if (k + 1 >= card_begin.size())
        return -1;
    const auto first = members.begin() + static_cast<std::ptrdiff_t>(card_begin[k]);
    const auto last = members.begin() + static_cast<std::ptrdiff_t>(card_begin[k + 1]);
    const auto it = std::lower_bound(first, last, mask);
    if (it == last || *it != mask)
        return -1;
    return it - members.begin();
}

SubsetPoset make_poset(std::size_t n, std::vector<uint64_t> members) {
    if (n < 1 || n > kMaxPosetVars)
        throw DomainError("poset ambient size must be between 1 and " +
                          std::to_string(kMaxPosetVars));
    for (uint64_t m : members)
        if (n < 64 && (m >> n) != 0)
            throw DomainError("poset member outside the ambient set");
    std::sort(members.begin(), members.end(), cardValueLess);
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw DomainError("duplicate poset member");
    SubsetPoset p;
    p.n = n;
    p.card_begin = buildCardIndex(n, members);
    p.members = std::move(members);
    return p;
}

SubsetPoset build_poset(const MonomialIdeal& J, const MonomialIdeal& I, const Limits& limits) {
    if (J.nvars() != I.nvars())
        throw DomainError("ideals live in different rings");
    const std::size_t n = J.nvars();
    if (!J.is_squarefree() || !I.is_squarefree())
        throw DomainError("characteristic posets need squarefree ideals; polarize first");
    if (n > kMaxPosetVars)
        throw DomainError("poset ambient size must be at most " + std::to_string(kMaxPosetVars));
    if (n > limits.enum_cap)
        throw CapError("enumerating 2^" + std::to_string(n) +
                       " subsets exceeds the cap of n = " + std::to_string(limits.enum_cap));
    if (!J.contains_ideal(I))
        throw DomainError("I is not contained in J");

    // Bucket members by cardinality while enumerating, then concatenate: the
    // (cardinality, value) order falls out for free because masks ascend.
    std::vector<std::vector<uint64_t>> byCard(n + 1);
    const uint64_t top = uint64_t(1) << n;
    for (uint64_t mask = 0; mask < top; ++mask) {
        if (!J.contains_squarefree(mask) || I.contains_squarefree(mask))
            continue;
        byCard[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    SubsetPoset p;
    p.n = n;
    std::size_t total = 0;
    for (const auto& bucket : byCard)
        total += bucket.size();
    p.members.reserve(total);
    for (auto& bucket : byCard)
        p.members.insert(p.members.end(), bucket.begin(), bucket.end());
    p.card_begin = buildCardIndex(n, p.members);
    return p;
}

} // namespace qdepth
