#include "qdepth/parse.hpp"

#include "qdepth/errors.hpp"

#include <cctype>
#include <vector>

namespace qdepth {

namespace {

// Keeps pathological inputs from turning into absurd polarizations.
constexpr uint64_t kMaxExponent = 1'000'000;

class Scanner {
public:
    Scanner(std::string_view text, std::size_t n) : mText(text), mN(n) {}

    MonomialIdeal run() {
        std::vector<Monomial> gens;
        skipSeparators();
        while (!eof()) {
            gens.push_back(parseMonomial());
            skipBlanks();
            if (eof())
                break;
            const char c = peek();
            if (c != ',' && c != '\n')
                fail("expected ',' or newline between monomials");
            skipSeparators();
        }
        return MonomialIdeal(mN, std::move(gens));
    }

private:
    bool eof() const { return mPos >= mText.size(); }
    char peek() const { return mText[mPos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, mPos);
    }

    // Spaces, tabs, CR. Newlines are separators, not blanks.
    void skipBlanks() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
            ++mPos;
    }

    void skipSeparators() {
        skipBlanks();
        while (!eof() && (peek() == ',' || peek() == '\n')) {
            ++mPos;
            skipBlanks();
        }
    }

    uint64_t parseNumber(const char* what) {
        skipBlanks();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<uint64_t>(peek() - '0');
            if (v > kMaxExponent)
                fail(std::string(what) + " too large");
            ++mPos;
        }
        return v;
    }

    Monomial parseMonomial() {
        skipBlanks();
        if (eof())
            fail("expected a monomial");
        if (peek() == '1') {
            ++mPos;
            skipBlanks();
            if (!eof() && peek() == '*')
                fail("'1' stands alone as the unit monomial");
            return Monomial::unit(mN);
        }
        std::vector<uint32_t> exps(mN, 0);
        parseTermInto(exps);
        skipBlanks();
        while (!eof() && peek() == '*') {
            ++mPos;
            parseTermInto(exps);
            skipBlanks();
        }
        return Monomial(mN, std::move(exps));
    }

    void parseTermInto(std::vector<uint32_t>& exps) {
        skipBlanks();
        if (eof() || (peek() != 'x' && peek() != 'X'))
            fail("expected a term like x3 or x3^2");
        ++mPos;
        const std::size_t indexPos = mPos;
        const uint64_t index = parseNumber("variable index");
        if (index < 1)
            throw ParseError("variable index must be at least 1", indexPos);
        if (index > mN)
            throw ParseError("variable x" + std::to_string(index) + " is out of range for " +
                                 std::to_string(mN) + " variables",
                             indexPos);
        uint64_t exp = 1;
        skipBlanks();
        if (!eof() && peek() == '^') {
            ++mPos;
            exp = parseNumber("exponent");
            if (exp < 1)
                fail("exponent must be at least 1");
        }
        const uint64_t total = uint64_t(exps[index - 1]) + exp;
        if (total > kMaxExponent)
            fail("accumulated exponent too large");
        exps[index - 1] = static_cast<uint32_t>(total);
    }

    std::string_view mText;
    std::size_t mN;
    std::size_t mPos = 0;
};

} // namespace

MonomialIdeal parse_ideal(std::string_view text, std::size_t n) {
    if (n < 1)
        throw ParseError("ambient ring needs at least one variable", 0);
    return Scanner(text, n).run();
}

} // namespace qdepth
