#include "qdepth/ci.hpp"

#include "qdepth/alpha.hpp"
#include "qdepth/beta.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/qdepth.hpp"

#include <numeric>
#include <stdexcept>

namespace qdepth {

namespace {

SymmetryCheck checkLevel(const AlphaVector& alpha, std::size_t d) {
    SymmetryCheck check;
    check.d = d;
    const BetaTable bt = beta_table(alpha, d);
    for (std::size_t k = 0; 2 * k <= d; ++k) {
        const BigInt sum = bt.entries[k] + bt.entries[d - k];
        if (sum != 0) {
            check.violations.push_back(SymmetryViolation{k, sum});
        }
    }
    check.holds = check.violations.empty();
    return check;
}

} // namespace

CISymmetryReport ci_symmetry(std::size_t n, std::vector<uint32_t> degs,
                             std::optional<std::size_t> d_override) {
    const AlphaVector alpha = alpha_ci(n, degs, ModuleMode::quotient);

    CISymmetryReport report;
    report.n = n;
    report.m = degs.size();
    report.degs = std::move(degs);
    const std::size_t degSum =
        std::accumulate(report.degs.begin(), report.degs.end(), std::size_t{0});
    report.full_support = degSum == n;

    const std::size_t dLow = n - report.m + 1; // m <= n, so this is >= 1
    report.endpoint = beta_closed(alpha, dLow, dLow);
    if (report.full_support && report.endpoint != -1) {
        throw std::logic_error("full-support endpoint must be -1");
    }
    if (!report.full_support && report.endpoint != 0) {
        throw std::logic_error("partial-support endpoint must be 0");
    }

    std::vector<std::size_t> levels;
    if (d_override) {
        levels.push_back(*d_override);
    } else {
        levels.push_back(dLow);
        const std::size_t dHigh = n + report.m - 1;
        if (dHigh != dLow) {
            levels.push_back(dHigh);
        }
    }
    report.all_hold = true;
    for (const std::size_t d : levels) {
        report.checks.push_back(checkLevel(alpha, d));
        report.all_hold = report.all_hold && report.checks.back().holds;
    }
    return report;
}

CIQDepthCheck ci_qdepth_check(std::size_t n, std::vector<uint32_t> degs) {
    const AlphaVector alpha = alpha_ci(n, degs, ModuleMode::quotient);

    CIQDepthCheck check;
    check.n = n;
    check.m = degs.size();
    check.degs = std::move(degs);
    check.expected = static_cast<long long>(n) - static_cast<long long>(check.m);
    check.value = qdepth_from_alpha(alpha).value;
    if (check.value != check.expected) {
        throw std::logic_error("complete intersection qdepth must equal n - m");
    }
    return check;
}

} // namespace qdepth
