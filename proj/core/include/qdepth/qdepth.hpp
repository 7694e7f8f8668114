#pragma once

#include "qdepth/beta.hpp"
#include "qdepth/limits.hpp"
#include "qdepth/polarize.hpp"

#include <optional>

namespace qdepth {

// The least failing beta entry one level above the answer.
struct BetaBlocker {
    std::size_t k = 0;
    BigInt value;
};

struct QDepthReport {
    long long value = 0;         // the quasi depth, after subtracting n_added
    std::size_t n_effective = 0; // ambient size actually used (post-polarization)
    std::size_t n_added = 0;     // polarization variables subtracted back out
    // The full beta table at level value + n_added (all entries >= 0).
    BetaTable witness;
    // At level value + n_added + 1; absent when value + n_added = n_effective.
    std::optional<BetaBlocker> blocker;
};

// max{ d : beta_k^d >= 0 for all k <= d }, scanning every level d = n..0
// rather than assuming feasibility is downward-closed. The quick bounds
// min-support <= value <= max-support are asserted internally.
QDepthReport qdepth_from_alpha(const AlphaVector& alpha);

// Quasi depth of J/I for squarefree ideals, straight from the characteristic
// poset. DomainError when the module is zero (I = J on the poset level).
QDepthReport qdepth_squarefree(const MonomialIdeal& J, const MonomialIdeal& I,
                               const Limits& limits = {});

// Quasi depth of J/I for arbitrary monomial ideals: polarize the pair
// jointly, compute on the squarefree side, subtract the added variable count.
// Requires I contained in J (checked generator-wise).
QDepthReport qdepth(const MonomialIdeal& J, const MonomialIdeal& I, const Limits& limits = {});

// Adjoining one fresh variable raises the quasi depth by exactly 1; computes
// both sides directly and reports whether they differ by 1.
bool check_extension_shift(const MonomialIdeal& J, const MonomialIdeal& I,
                           const Limits& limits = {});

struct SandwichReport {
    long long base = 0;        // qdepth(S/I)
    long long with_u = 0;      // qdepth(S/(I,u))
    long long floor_bound = 0; // base - 1
    bool variable_case = false;
    // Heuristic only, never asserted: for squarefree u, whether
    // alpha_{d+1}(S'/I') < beta_{d+1-deg u}^{d}(S'/I') at d = qdepth(S'/I'),
    // with S' the subring away from supp(u). A hint that the sandwich sits at
    // its floor.
    std::optional<bool> collapse_hint;
};

// For u regular on S/I (monomial test: supp(u) disjoint from every
// generator), qdepth(S/I) >= qdepth(S/(I,u)) >= qdepth(S/I) - 1, with
// equality at the bottom when u is a single variable. Both inequalities are
// asserted; violations are internal errors, not domain errors.
SandwichReport check_regular_sandwich(const MonomialIdeal& I, const Monomial& u,
                                      const Limits& limits = {});

// Beta table at level d+s of S/(I'S + (x_{m+1}...x_{m+s})), where I' lives in
// m variables and S adjoins s fresh ones, computed from alpha(S'/I') alone:
//
//   beta_k = beta_k^d(S'/I')                                    for k <= d
//   beta_k = sum_l C(k-d-1, l) alpha_{d+1+l}(S'/I')             for d < k <= d+s
//   minus beta_{k-s}^d(S'/I') in both ranges (0 when k < s).
//
// The result is validated against the defining recursion on construction.
BetaTable beta_adjoin_fresh_product(const MonomialIdeal& Iprime, std::size_t s, std::size_t d,
                                    const Limits& limits = {});

struct LowerBounds {
    long long quotient = 0; // qdepth(S/I) >= n - m
    long long ideal = 0;    // qdepth(I)   >= max{1, n - floor(m/2)}
};

// The generator-count lower bounds for an ideal minimally generated by m
// monomials. Asserted on every qdepth run of the matching module shape.
LowerBounds qdepth_lower_bounds(const MonomialIdeal& I);

} // namespace qdepth
