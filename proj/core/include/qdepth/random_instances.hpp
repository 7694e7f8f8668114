#pragma once

#include "qdepth/alpha.hpp"
#include "qdepth/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace qdepth {

// All generators draw from a caller-owned engine so a fixed seed reproduces
// the whole instance stream. Bounds are drawn with plain modulo; the bias is
// irrelevant at instance-generation sizes.
using Rng = std::mt19937_64;

inline std::size_t draw_index(Rng& rng, std::size_t bound) { // [0, bound)
    return static_cast<std::size_t>(rng() % bound);
}

inline MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t n, std::size_t max_gens) {
    const std::size_t count = draw_index(rng, max_gens + 1);
    std::vector<Monomial> gens;
    gens.reserve(count);
    const uint64_t full = (n >= 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const uint64_t mask = (rng() & full) | (uint64_t(1) << draw_index(rng, n));
        gens.push_back(Monomial::squarefree(n, mask));
    }
    return MonomialIdeal(n, gens);
}

inline MonomialIdeal random_bounded_ideal(Rng& rng, std::size_t n, std::size_t max_gens,
                                          uint32_t max_exp) {
    const std::size_t count = draw_index(rng, max_gens + 1);
    std::vector<Monomial> gens;
    gens.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<uint32_t> exps(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            exps[v] = static_cast<uint32_t>(draw_index(rng, max_exp + 1));
        }
        if (std::all_of(exps.begin(), exps.end(), [](uint32_t e) { return e == 0; })) {
            exps[draw_index(rng, n)] = 1;
        }
        gens.push_back(Monomial(n, std::move(exps)));
    }
    return MonomialIdeal(n, gens);
}

struct IdealPair {
    MonomialIdeal lower; // I
    MonomialIdeal upper; // J, contains I
};

inline IdealPair random_nested_squarefree_pair(Rng& rng, std::size_t n, std::size_t max_gens) {
    const MonomialIdeal lower = random_squarefree_ideal(rng, n, max_gens);
    const MonomialIdeal extra = random_squarefree_ideal(rng, n, max_gens);
    std::vector<Monomial> gens = lower.generators();
    for (const Monomial& g : extra.generators()) {
        gens.push_back(g);
    }
    return IdealPair{lower, MonomialIdeal(n, gens)};
}

inline IdealPair random_nested_bounded_pair(Rng& rng, std::size_t n, std::size_t max_gens,
                                            uint32_t max_exp) {
    const MonomialIdeal lower = random_bounded_ideal(rng, n, max_gens, max_exp);
    const MonomialIdeal extra = random_bounded_ideal(rng, n, max_gens, max_exp);
    std::vector<Monomial> gens = lower.generators();
    for (const Monomial& g : extra.generators()) {
        gens.push_back(g);
    }
    return IdealPair{lower, MonomialIdeal(n, gens)};
}

// A composition of n into m positive parts, uniform over cut positions.
inline std::vector<uint32_t> random_full_support_degrees(Rng& rng, std::size_t n,
                                                          std::size_t m) {
    std::vector<std::size_t> cuts;
    cuts.reserve(m - 1);
    std::vector<std::size_t> gaps(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) {
        gaps[i] = i + 1;
    }
    for (std::size_t i = 0; i < m - 1; ++i) {
        const std::size_t pick = draw_index(rng, gaps.size() - i);
        cuts.push_back(gaps[pick]);
        std::swap(gaps[pick], gaps[gaps.size() - 1 - i]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    std::vector<uint32_t> degs;
    degs.reserve(m);
    std::size_t prev = 0;
    for (const std::size_t c : cuts) {
        degs.push_back(static_cast<uint32_t>(c - prev));
        prev = c;
    }
    return degs;
}

// The complete intersection on consecutive variable blocks of the given
// degrees: x1..x_d1, then the next d2 variables, and so on.
inline MonomialIdeal ci_ideal(std::size_t n, const std::vector<uint32_t>& degs) {
    std::vector<Monomial> gens;
    gens.reserve(degs.size());
    std::size_t next = 0;
    for (const uint32_t d : degs) {
        uint64_t mask = 0;
        for (std::size_t i = 0; i < d; ++i) {
            mask |= uint64_t(1) << (next + i);
        }
        next += d;
        gens.push_back(Monomial::squarefree(n, mask));
    }
    return MonomialIdeal(n, gens);
}

inline AlphaVector random_alpha(Rng& rng, std::size_t n, long long max_entry) {
    AlphaVector alpha;
    alpha.n = n;
    alpha.counts.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        alpha.counts.push_back(
            BigInt(static_cast<long long>(draw_index(rng, static_cast<std::size_t>(max_entry) + 1))));
    }
    return alpha;
}

} // namespace qdepth
