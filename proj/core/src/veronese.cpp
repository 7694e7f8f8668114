#include "qdepth/veronese.hpp"

#include "qdepth/bigint.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/qdepth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdepth {

namespace {

constexpr std::size_t kGeneratorCap = std::size_t{1} << 20;

void checkParameters(std::size_t n, std::size_t m) {
    if (n < 1) {
        throw DomainError("the ambient ring needs at least one variable");
    }
    if (m < 1 || m > n) {
        throw DomainError("veronese degree must satisfy 1 <= m <= n");
    }
}

} // namespace

MonomialIdeal veronese_ideal(std::size_t n, std::size_t m, const Limits&) {
    checkParameters(n, m);
    const BigInt count = binomial(static_cast<long long>(n), static_cast<long long>(m));
    if (count > kGeneratorCap) {
        throw CapError("veronese ideal would have " + to_decimal(count) +
                       " generators, cap is " + std::to_string(kGeneratorCap));
    }

    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(count));
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) {
        pick[i] = i;
    }
    while (true) {
        uint64_t mask = 0;
        if (n <= 64) {
            for (const std::size_t p : pick) {
                mask |= uint64_t(1) << p;
            }
            gens.push_back(Monomial::squarefree(n, mask));
        } else {
            std::vector<uint32_t> exps(n, 0);
            for (const std::size_t p : pick) {
                exps[p] = 1;
            }
            gens.push_back(Monomial(n, std::move(exps)));
        }
        // advance to the next m-combination of {0, ..., n-1}
        std::size_t i = m;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (pick[i] + (m - i) < n) {
                ++pick[i];
                for (std::size_t j = i + 1; j < m; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            break;
        }
    }
    return MonomialIdeal(n, gens);
}

AlphaVector alpha_veronese(std::size_t n, std::size_t m, ModuleMode mode) {
    checkParameters(n, m);
    AlphaVector alpha;
    alpha.n = n;
    alpha.counts.assign(n + 1, BigInt(0));
    for (std::size_t k = 0; k <= n; ++k) {
        const bool inIdeal = k >= m;
        if ((mode == ModuleMode::ideal) == inIdeal) {
            alpha.counts[k] = binomial(static_cast<long long>(n), static_cast<long long>(k));
        }
    }
    return alpha;
}

VeroneseReport qdepth_veronese(std::size_t n, std::size_t m) {
    checkParameters(n, m);
    VeroneseReport report;
    report.n = n;
    report.m = m;
    report.q = (n - m) / (m + 1);
    report.upper_bound = static_cast<long long>(m + report.q);

    const QDepthReport ideal = qdepth_from_alpha(alpha_veronese(n, m, ModuleMode::ideal));
    report.value = ideal.value;
    if (report.value > report.upper_bound) {
        throw std::logic_error("veronese qdepth exceeded m + q");
    }
    if (report.value < static_cast<long long>(m)) {
        throw std::logic_error("veronese qdepth fell below m");
    }

    const std::size_t regionEdge = std::max(m * m + 4 * m + 1, 7 * m + 5);
    report.in_theorem_region = n <= regionEdge;
    if (report.in_theorem_region && report.value != report.upper_bound) {
        throw std::logic_error("veronese qdepth missed m + q inside the equality region");
    }
    if (n <= 2 * m && report.value != static_cast<long long>(m)) {
        throw std::logic_error("veronese qdepth must equal m when n <= 2m");
    }

    report.quotient_value =
        qdepth_from_alpha(alpha_veronese(n, m, ModuleMode::quotient)).value;
    if (report.quotient_value != static_cast<long long>(m) - 1) {
        throw std::logic_error("veronese quotient qdepth must equal m - 1");
    }
    return report;
}

} // namespace qdepth
