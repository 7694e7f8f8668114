#include "qdepth/monomial.hpp"

#include "qdepth/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdepth {

Monomial::Monomial(std::size_t n, std::vector<uint32_t> exps) : mExps(std::move(exps)) {
    if (mExps.size() != n)
        throw std::invalid_argument("exponent vector length does not match variable count");
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
    if (i < 1 || i > n)
        throw std::invalid_argument("variable index out of range");
    std::vector<uint32_t> e(n, 0);
    e[i - 1] = 1;
    return Monomial(n, std::move(e));
}

Monomial Monomial::squarefree(std::size_t n, uint64_t mask) {
    if (n > 64 || (n < 64 && (mask >> n) != 0))
        throw std::invalid_argument("support mask does not fit in n variables");
    std::vector<uint32_t> e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (uint64_t(1) << i))
            e[i] = 1;
    return Monomial(n, std::move(e));
}

uint32_t Monomial::exponent(std::size_t i) const {
    if (i < 1 || i > mExps.size())
        throw std::invalid_argument("variable index out of range");
    return mExps[i - 1];
}

uint64_t Monomial::degree() const {
    uint64_t d = 0;
    for (uint32_t e : mExps)
        d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(mExps.begin(), mExps.end(), [](uint32_t e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(mExps.begin(), mExps.end(), [](uint32_t e) { return e <= 1; });
}

uint64_t Monomial::support_mask() const {
    if (mExps.size() > 64)
        throw DomainError("support masks require at most 64 variables");
    uint64_t mask = 0;
    for (std::size_t i = 0; i < mExps.size(); ++i)
        if (mExps[i] > 0)
            mask |= uint64_t(1) << i;
    return mask;
}

std::size_t Monomial::support_size() const {
    std::size_t s = 0;
    for (uint32_t e : mExps)
        if (e > 0)
            ++s;
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars())
        throw std::invalid_argument("monomials live in different rings");
    for (std::size_t i = 0; i < mExps.size(); ++i)
        if (mExps[i] > other.mExps[i])
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    if (nvars() != other.nvars())
        throw std::invalid_argument("monomials live in different rings");
    std::vector<uint32_t> e(mExps.size());
    for (std::size_t i = 0; i < mExps.size(); ++i) {
        const uint64_t s = uint64_t(mExps[i]) + uint64_t(other.mExps[i]);
        if (s > UINT32_MAX)
            throw std::overflow_error("exponent overflow in monomial product");
        e[i] = static_cast<uint32_t>(s);
    }
    return Monomial(mExps.size(), std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomials live in different rings");
    std::vector<uint32_t> e(a.mExps.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.mExps[i], b.mExps[i]);
    return Monomial(a.nvars(), std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomials live in different rings");
    std::vector<uint32_t> e(a.mExps.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.mExps[i], b.mExps[i]);
    return Monomial(a.nvars(), std::move(e));
}

std::string Monomial::text() const {
    std::string out;
    for (std::size_t i = 0; i < mExps.size(); ++i) {
        if (mExps[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (mExps[i] > 1) {
            out += '^';
            out += std::to_string(mExps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    const uint64_t da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    // Same degree: the monomial whose earlier variables carry more weight
    // comes first (x1^2 before x1x2 before x1x3 before x2x3).
    return a.exponents() > b.exponents();
}

} // namespace qdepth
