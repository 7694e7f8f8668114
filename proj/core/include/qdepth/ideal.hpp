#pragma once

#include "qdepth/monomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qdepth {

// A monomial ideal, kept as its unique minimal generating set in canonical
// order. The zero ideal has no generators; the unit ideal has the single
// generator 1. Immutable after construction.
class MonomialIdeal {
public:
    // Minimalizes and sorts gens. All generators must live in n variables.
    MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::unit(n)}); }

    std::size_t nvars() const { return mNVars; }
    const std::vector<Monomial>& generators() const { return mGens; }
    std::size_t generator_count() const { return mGens.size(); }

    bool is_zero() const { return mGens.empty(); }
    bool is_unit() const { return mGens.size() == 1 && mGens.front().is_unit(); }
    bool is_squarefree() const;

    // Monomial membership: some generator divides mono.
    bool contains(const Monomial& mono) const;

    // Membership of the squarefree monomial x_C for a support bitmask C.
    // Non-squarefree generators never divide a squarefree monomial, so only
    // the squarefree ones are consulted. Requires n <= 64.
    bool contains_squarefree(uint64_t mask) const;

    // other is contained in this ideal (every generator of other is a member).
    bool contains_ideal(const MonomialIdeal& other) const;

    // Exponent-wise max over all generators (the all-zero monomial for the
    // zero ideal). This is the x^g that polarization works against.
    Monomial exponent_lcm() const;

    // Grammar form, e.g. "x1*x3, x1*x2*x4"; "0" for the zero ideal.
    std::string text() const;

    bool operator==(const MonomialIdeal& other) const {
        return mNVars == other.mNVars && mGens == other.mGens;
    }

private:
    std::size_t mNVars;
    std::vector<Monomial> mGens;
};

// Exponent-wise max over the generators selected by genmask (bit i for
// generators()[i]). The unit monomial when genmask is empty.
Monomial lcm_subset(const MonomialIdeal& ideal, uint64_t genmask);

// The same generators viewed in n + extra variables (the new variables do not
// occur). Extension by fresh variables changes no generator.
MonomialIdeal extend_ambient(const MonomialIdeal& ideal, std::size_t extra);

// Re-indexes the ideal into the subring on the 1-based variables `keep`
// (in the given order). Every generator must already live on those variables.
MonomialIdeal restrict_to_variables(const MonomialIdeal& ideal, const std::vector<std::size_t>& keep);

} // namespace qdepth
