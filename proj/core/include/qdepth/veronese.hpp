#pragma once

#include "qdepth/alpha.hpp"
#include "qdepth/ideal.hpp"
#include "qdepth/limits.hpp"

#include <cstddef>

namespace qdepth {

// The ideal generated by all squarefree monomials of degree m in n variables.
// Refuses when the generator count C(n, m) exceeds limits.incl_excl_gen_cap
// squared-ish budget (hard cap 1 << 20).
MonomialIdeal veronese_ideal(std::size_t n, std::size_t m, const Limits& limits = {});

// Closed-form alpha vector: the quotient keeps every subset of size < m, the
// ideal keeps every subset of size >= m.
AlphaVector alpha_veronese(std::size_t n, std::size_t m, ModuleMode mode);

struct VeroneseReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t q = 0; // floor((n - m) / (m + 1))
    long long value = 0; // qdepth of the ideal
    long long quotient_value = 0; // qdepth of the quotient, always m - 1
    long long upper_bound = 0; // m + q
    bool in_theorem_region = false; // n <= max(m^2 + 4m + 1, 7m + 5)
};

// qdepth of the squarefree Veronese ideal and its quotient, computed from the
// closed-form alpha vectors (no poset enumeration, so n can be large).
// Asserts value <= m + q, with equality inside the theorem region, and
// value == m when n <= 2m.
VeroneseReport qdepth_veronese(std::size_t n, std::size_t m);

} // namespace qdepth
