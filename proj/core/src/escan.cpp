#include "qdepth/escan.hpp"

#include "qdepth/errors.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qdepth {

namespace {

void checkEArguments(long long m, long long q, long long t, long long n) {
    if (m < 1) {
        throw DomainError("E(m, q, t, n) requires m >= 1");
    }
    if (t < 1 || q < t) {
        throw DomainError("E(m, q, t, n) requires q >= t >= 1");
    }
    if (n < 0) {
        throw DomainError("E(m, q, t, n) requires n >= 0");
    }
}

// Closed forms for the two base rows of the q-recursion, kept separate from
// the generic sum so the recursion is checked against independent code.
BigInt rowT1(long long m, long long q, long long n) {
    return binomial(n, m + 1) - BigInt(q) * binomial(n, m);
}

BigInt rowTEqQ(long long m, long long q, long long n) {
    BigInt acc = 0;
    for (long long j = 0; j <= q; ++j) {
        const BigInt term = binomial(n, m + j);
        if ((q - j) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

} // namespace

BigInt E_value(long long m, long long q, long long t, long long n) {
    checkEArguments(m, q, t, n);
    BigInt acc = 0;
    for (long long j = 0; j <= t; ++j) {
        const BigInt term = binomial(q - j, t - j) * binomial(n, m + j);
        if ((t - j) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

BigInt E_rec_q(long long m, long long q, long long t, long long n) {
    checkEArguments(m, q, t, n);
    std::map<std::pair<long long, long long>, BigInt> memo;
    const std::function<BigInt(long long, long long)> eval = [&](long long qq,
                                                                 long long tt) -> BigInt {
        if (tt == 1) {
            return rowT1(m, qq, n);
        }
        if (tt == qq) {
            return rowTEqQ(m, qq, n);
        }
        const auto key = std::make_pair(qq, tt);
        const auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
        BigInt value = eval(qq - 1, tt) - eval(qq - 1, tt - 1);
        memo.emplace(key, value);
        return value;
    };
    return eval(q, t);
}

BigInt E_rec_n(long long m, long long q, long long t, long long n) {
    checkEArguments(m, q, t, n);
    std::map<std::pair<long long, long long>, BigInt> memo;
    const std::function<BigInt(long long, long long)> eval = [&](long long mm,
                                                                 long long nn) -> BigInt {
        if (nn == 0) {
            return BigInt(0); // C(0, mm + j) vanishes for mm >= 1
        }
        if (mm == 1) {
            return E_value(1, q, t, nn);
        }
        const auto key = std::make_pair(mm, nn);
        const auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
        BigInt value = eval(mm, nn - 1) + eval(mm - 1, nn - 1);
        memo.emplace(key, value);
        return value;
    };
    return eval(m, n);
}

BigInt gamma_term(long long m, long long q, long long t, long long j, long long n) {
    checkEArguments(m, q, t, n);
    if (j < 0 || j > t) {
        throw DomainError("gamma_term requires 0 <= j <= t");
    }
    return binomial(q - j, t - j) * binomial(n, m + j);
}

BigRat alpha_ratio(long long m, long long q, long long t, long long j) {
    checkEArguments(m, q, t, m * q + m + q);
    if (j < 0 || j > t - 1) {
        throw DomainError("alpha_ratio requires 0 <= j <= t - 1");
    }
    const BigInt num = BigInt(t - j) * BigInt(m * q + q - j);
    const BigInt den = BigInt(q - j) * BigInt(m + j + 1);
    return BigRat(num, den);
}

BigInt E_product_form(long long m, long long q, long long t) {
    checkEArguments(m, q, t, m * q + m + q);
    BigRat sum = 0;
    BigRat partial = 1; // prod_{l < j} alpha_ratio(l)
    for (long long j = 0; j <= t; ++j) {
        if ((t - j) % 2 == 0) {
            sum += partial;
        } else {
            sum -= partial;
        }
        if (j < t) {
            partial *= alpha_ratio(m, q, t, j);
        }
    }
    const BigRat total =
        BigRat(binomial(q, t) * binomial(m * q + m + q, m)) * sum;
    if (boost::multiprecision::denominator(total) != 1) {
        throw std::logic_error("E product form did not collapse to an integer");
    }
    return BigInt(boost::multiprecision::numerator(total));
}

std::string classify_cell(long long m, long long q, long long t) {
    checkEArguments(m, q, t, 0);
    if (m == 1) {
        return "m1-case";
    }
    if (t == 1) {
        return "t1-lemma";
    }
    if (t == q) {
        return "t-eq-q-lemma";
    }
    if (q <= m + t - 1) {
        return "q-small";
    }
    if (t <= 4) {
        return "t-le-4";
    }
    return "open";
}

void conjecture_scan(long long m_max, long long q_max,
                     const std::function<void(const ScanCell&)>& sink) {
    if (m_max < 1 || q_max < 1) {
        throw DomainError("conjecture_scan requires m_max >= 1 and q_max >= 1");
    }
    for (long long m = 1; m <= m_max; ++m) {
        for (long long q = 1; q <= q_max; ++q) {
            for (long long t = 1; t <= q; ++t) {
                ScanCell cell;
                cell.m = m;
                cell.q = q;
                cell.t = t;
                cell.n = m * q + m + q;
                cell.E = E_value(m, q, t, cell.n);
                cell.holds = cell.E >= 0;
                cell.proof_status = classify_cell(m, q, t);
                if (!cell.holds && cell.proof_status != "open") {
                    throw std::logic_error("a settled cell of the positivity scan failed");
                }
                sink(cell);
            }
        }
    }
}

} // namespace qdepth
