#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdepth {

// A monomial in K[x_1..x_n], stored as its exponent vector. Variables are
// 1-based everywhere in the public interface, matching the text grammar
// (x1, x2, ...). Immutable after construction.
class Monomial {
public:
    // The unit monomial 1 in n variables.
    explicit Monomial(std::size_t n) : mExps(n, 0) {}

    Monomial(std::size_t n, std::vector<uint32_t> exps);

    static Monomial unit(std::size_t n) { return Monomial(n); }
    static Monomial variable(std::size_t n, std::size_t i); // x_i
    static Monomial squarefree(std::size_t n, uint64_t mask);

    std::size_t nvars() const { return mExps.size(); }
    uint32_t exponent(std::size_t i) const; // 1-based
    const std::vector<uint32_t>& exponents() const { return mExps; }

    uint64_t degree() const;
    bool is_unit() const;
    bool is_squarefree() const;

    // Bitmask of the variables that occur (bit i-1 for x_i). Requires n <= 64.
    uint64_t support_mask() const;
    std::size_t support_size() const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    // Grammar form, e.g. "x1^2*x3"; the unit monomial prints as "1".
    std::string text() const;

    bool operator==(const Monomial& other) const { return mExps == other.mExps; }

private:
    std::vector<uint32_t> mExps;
};

// Canonical generator order: by degree, then earlier variables with higher
// exponents first. Within one degree this lists x1x2 before x1x3 before x2x3.
bool canonical_less(const Monomial& a, const Monomial& b);

} // namespace qdepth
