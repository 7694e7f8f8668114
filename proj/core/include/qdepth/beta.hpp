#pragma once

#include "qdepth/alpha.hpp"
#include "qdepth/bigint.hpp"

#include <optional>
#include <vector>

namespace qdepth {

// The level-d beta table of an alpha vector:
//
//   beta_0^d = alpha_0
//   beta_k^d = alpha_k - sum_{j<k} C(d-j, k-j) * beta_j^d      (0 <= k <= d)
//
// Alpha entries above n read as 0, so d may exceed n. Entries are exact.
struct BetaTable {
    std::size_t d = 0;
    std::vector<BigInt> entries; // size d+1
    AlphaVector source_alpha;

    bool nonnegative() const;
};

BetaTable beta_table(const AlphaVector& alpha, std::size_t d);

// Same entry by the inversion formula, no table:
//   beta_k^d = sum_{j<=k} (-1)^(k-j) C(d-j, k-j) alpha_j.
BigInt beta_closed(const AlphaVector& alpha, std::size_t d, std::size_t k);

// Inverts a table back to the alpha prefix it encodes (indices 0..d):
//   alpha_k = sum_{j<=k} C(d-j, k-j) beta_j^d.
AlphaVector alpha_from_beta(const BetaTable& table);

// All of beta_0^d..beta_d^d nonnegative? Stops at the first negative entry.
bool beta_feasible(const AlphaVector& alpha, std::size_t d);

struct FirstNegative {
    std::size_t k = 0;
    BigInt value;
};

// The least k with beta_k^d < 0, if any.
std::optional<FirstNegative> beta_first_negative(const AlphaVector& alpha, std::size_t d);

// Wraps externally computed entries, validating them against the recursion
// for alpha. Construction fails loudly (std::logic_error) on any mismatch, so
// closed-form builders cannot ship a wrong table.
BetaTable beta_table_from_entries(std::size_t d, std::vector<BigInt> entries, AlphaVector alpha);

} // namespace qdepth
