#include "qdepth/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qdepth {

namespace {

// Pascal rows are cached up to this height; larger arguments fall back to the
// multiplicative formula. The scans stay far below the cap, so the hot paths
// always hit the cache.
constexpr long long kRowCacheCap = 512;

// deque: growing must not move the already-published rows.
std::deque<std::vector<BigInt>> gRows;
std::mutex gRowsMutex;

BigInt binomialMultiplicative(long long a, long long b) {
    b = std::min(b, a - b);
    BigInt acc = 1;
    for (long long i = 1; i <= b; ++i) {
        acc *= a - b + i;
        acc /= i; // exact: acc is C(a-b+i, i) * i! / i! at every step
    }
    return acc;
}

} // namespace

BigInt binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a)
        return BigInt(0);
    if (a > kRowCacheCap)
        return binomialMultiplicative(a, b);

    std::lock_guard<std::mutex> lock(gRowsMutex);
    while (static_cast<long long>(gRows.size()) <= a) {
        const std::size_t r = gRows.size();
        std::vector<BigInt> row(r + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t j = 1; j < r; ++j)
            row[j] = gRows[r - 1][j - 1] + gRows[r - 1][j];
        gRows.push_back(std::move(row));
    }
    return gRows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::string to_decimal(const BigInt& v) {
    return v.str();
}

BigInt bigint_from_decimal(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-'))
        ++i;
    if (i == text.size())
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("not a decimal integer: '" + text + "'");
    // cpp_int's own parser takes a leading '-' but not a '+'.
    return BigInt(text.front() == '+' ? text.substr(1) : text);
}

} // namespace qdepth
