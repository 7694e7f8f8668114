#include "qdepth/polarize.hpp"

#include <stdexcept>

namespace qdepth {

namespace {

struct ReplicaTable {
    std::size_t n = 0;     // original variable count
    std::size_t added = 0; // N
    std::vector<VariableReplica> map;
    // index (0-based into the polarized ring) of replica (i, j); slot lookup
    std::vector<std::vector<std::size_t>> slots; // slots[i-1][j-2]
};

ReplicaTable buildReplicas(const Monomial& g) {
    ReplicaTable t;
    t.n = g.nvars();
    t.slots.resize(t.n);
    std::size_t next = t.n; // 0-based position of the next replica
    for (std::size_t i = 1; i <= t.n; ++i) {
        const uint32_t gi = g.exponent(i);
        for (uint32_t j = 2; j <= gi; ++j) {
            t.slots[i - 1].push_back(next);
            t.map.push_back({i, j, next + 1});
            ++next;
            ++t.added;
        }
    }
    return t;
}

Monomial polarizeMonomial(const Monomial& u, const ReplicaTable& t) {
    std::vector<uint32_t> e(t.n + t.added, 0);
    for (std::size_t i = 1; i <= t.n; ++i) {
        const uint32_t a = u.exponent(i);
        if (a == 0)
            continue;
        e[i - 1] = 1;
        for (uint32_t j = 2; j <= a; ++j)
            e[t.slots[i - 1][j - 2]] = 1;
    }
    return Monomial(t.n + t.added, std::move(e));
}

MonomialIdeal polarizeAgainst(const MonomialIdeal& ideal, const ReplicaTable& t) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const Monomial& g : ideal.generators())
        gens.push_back(polarizeMonomial(g, t));
    MonomialIdeal out(t.n + t.added, std::move(gens));
    // Polarizing a minimal generating set keeps it minimal.
    if (out.generator_count() != ideal.generator_count())
        throw std::logic_error("polarization changed the generator count");
    return out;
}

} // namespace

PolarizationResult polarize(const MonomialIdeal& ideal) {
    const ReplicaTable t = buildReplicas(ideal.exponent_lcm());
    return {polarizeAgainst(ideal, t), t.added, t.map};
}

PolarizedPair polarize_pair(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw std::invalid_argument("ideals live in different rings");
    const Monomial g = Monomial::lcm(I.exponent_lcm(), J.exponent_lcm());
    const ReplicaTable t = buildReplicas(g);
    return {polarizeAgainst(I, t), polarizeAgainst(J, t), t.added, t.map};
}

} // namespace qdepth
