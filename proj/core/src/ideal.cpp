#include "qdepth/ideal.hpp"

#include "qdepth/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdepth {

namespace {

// Unique minimal generating set: drop duplicates and anything divisible by
// another generator.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            // kept is sorted by degree, so only divisors can appear before g
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            kept.push_back(g);
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : mNVars(n) {
    if (n < 1)
        throw std::invalid_argument("ambient ring needs at least one variable");
    for (const Monomial& g : gens)
        if (g.nvars() != n)
            throw std::invalid_argument("generator does not live in the ambient ring");
    mGens = minimalize(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(mGens.begin(), mGens.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& mono) const {
    for (const Monomial& g : mGens)
        if (g.divides(mono))
            return true;
    return false;
}

bool MonomialIdeal::contains_squarefree(uint64_t mask) const {
    for (const Monomial& g : mGens) {
        if (!g.is_squarefree())
            continue;
        const uint64_t s = g.support_mask();
        if ((s & mask) == s)
            return true;
    }
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    if (nvars() != other.nvars())
        throw std::invalid_argument("ideals live in different rings");
    return std::all_of(other.mGens.begin(), other.mGens.end(),
                       [this](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::exponent_lcm() const {
    Monomial acc = Monomial::unit(mNVars);
    for (const Monomial& g : mGens)
        acc = Monomial::lcm(acc, g);
    return acc;
}

std::string MonomialIdeal::text() const {
    if (mGens.empty())
        return "0";
    std::string out;
    for (const Monomial& g : mGens) {
        if (!out.empty())
            out += ", ";
        out += g.text();
    }
    return out;
}

Monomial lcm_subset(const MonomialIdeal& ideal, uint64_t genmask) {
    if (ideal.generator_count() < 64 && (genmask >> ideal.generator_count()) != 0)
        throw std::invalid_argument("generator mask selects missing generators");
    Monomial acc = Monomial::unit(ideal.nvars());
    for (std::size_t i = 0; i < ideal.generator_count(); ++i)
        if (genmask & (uint64_t(1) << i))
            acc = Monomial::lcm(acc, ideal.generators()[i]);
    return acc;
}

MonomialIdeal extend_ambient(const MonomialIdeal& ideal, std::size_t extra) {
    const std::size_t n = ideal.nvars() + extra;
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const Monomial& g : ideal.generators()) {
        std::vector<uint32_t> e = g.exponents();
        e.resize(n, 0);
        gens.emplace_back(n, std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal restrict_to_variables(const MonomialIdeal& ideal, const std::vector<std::size_t>& keep) {
    std::vector<uint32_t> slot(ideal.nvars(), UINT32_MAX);
    for (std::size_t j = 0; j < keep.size(); ++j) {
        if (keep[j] < 1 || keep[j] > ideal.nvars())
            throw std::invalid_argument("restriction variable out of range");
        slot[keep[j] - 1] = static_cast<uint32_t>(j);
    }
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const Monomial& g : ideal.generators()) {
        std::vector<uint32_t> e(keep.size(), 0);
        for (std::size_t i = 0; i < ideal.nvars(); ++i) {
            const uint32_t x = g.exponents()[i];
            if (x == 0)
                continue;
            if (slot[i] == UINT32_MAX)
                throw DomainError("generator uses a variable outside the restriction");
            e[slot[i]] = x;
        }
        gens.emplace_back(keep.size(), std::move(e));
    }
    return MonomialIdeal(keep.size(), std::move(gens));
}

} // namespace qdepth
