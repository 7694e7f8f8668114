#include "qdepth/beta.hpp"

#include <stdexcept>

namespace qdepth {

namespace {

BigInt nextEntry(const AlphaVector& alpha, std::size_t d, std::size_t k,
                 const std::vector<BigInt>& prior) {
    BigInt v = alpha.at_or_zero(k);
    for (std::size_t j = 0; j < k; ++j)
        v -= binomial(static_cast<long long>(d - j), static_cast<long long>(k - j)) * prior[j];
    return v;
}

} // namespace

bool BetaTable::nonnegative() const {
    for (const BigInt& e : entries)
        if (e < 0)
            return false;
    return true;
}

BetaTable beta_table(const AlphaVector& alpha, std::size_t d) {
    BetaTable t;
    t.d = d;
    t.source_alpha = alpha;
    t.entries.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k)
        t.entries.push_back(nextEntry(alpha, d, k, t.entries));
    return t;
}

BigInt beta_closed(const AlphaVector& alpha, std::size_t d, std::size_t k) {
    if (k > d)
        throw std::invalid_argument("beta index exceeds the table level");
    BigInt v = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        const BigInt term =
            binomial(static_cast<long long>(d - j), static_cast<long long>(k - j)) *
            alpha.at_or_zero(j);
        if ((k - j) % 2 == 0)
            v += term;
        else
            v -= term;
    }
    return v;
}

AlphaVector alpha_from_beta(const BetaTable& table) {
    AlphaVector a(table.d);
    for (std::size_t k = 0; k <= table.d; ++k) {
        BigInt v = 0;
        for (std::size_t j = 0; j <= k; ++j)
            v += binomial(static_cast<long long>(table.d - j), static_cast<long long>(k - j)) *
                 table.entries[j];
        a.counts[k] = v;
    }
    return a;
}

bool beta_feasible(const AlphaVector& alpha, std::size_t d) {
    std::vector<BigInt> entries;
    entries.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        BigInt v = nextEntry(alpha, d, k, entries);
        if (v < 0)
            return false;
        entries.push_back(std::move(v));
    }
    return true;
}

std::optional<FirstNegative> beta_first_negative(const AlphaVector& alpha, std::size_t d) {
    std::vector<BigInt> entries;
    entries.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        BigInt v = nextEntry(alpha, d, k, entries);
        if (v < 0)
            return FirstNegative{k, std::move(v)};
        entries.push_back(std::move(v));
    }
    return std::nullopt;
}

BetaTable beta_table_from_entries(std::size_t d, std::vector<BigInt> entries, AlphaVector alpha) {
    if (entries.size() != d + 1)
        throw std::logic_error("beta table has the wrong length");
    BetaTable t;
    t.d = d;
    t.entries = std::move(entries);
    t.source_alpha = std::move(alpha);
    for (std::size_t k = 0; k <= d; ++k)
        if (t.entries[k] != nextEntry(t.source_alpha, d, k, t.entries))
            throw std::logic_error("beta table entries violate the defining recursion at k = " +
                                   std::to_string(k));
    return t;
}

} // namespace qdepth
