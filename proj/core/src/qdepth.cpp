#include "qdepth/qdepth.hpp"

#include "qdepth/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdepth {

namespace {

// The generator-count bounds hold for the two module shapes S/I (J unit) and
// I (I as numerator over 0). A violation is a bug in the alpha/beta pipeline,
// not bad input.
void assertShapeBounds(const QDepthReport& report, const MonomialIdeal& J, const MonomialIdeal& I,
                       std::size_t n_original) {
    const auto n = static_cast<long long>(n_original);
    if (J.is_unit()) {
        const auto m = static_cast<long long>(I.generator_count());
        if (report.value < n - m)
            throw std::logic_error("qdepth(S/I) fell below n - m");
    }
    if (I.is_zero() && !J.is_zero()) {
        const auto m = static_cast<long long>(J.generator_count());
        if (report.value < std::max<long long>(1, n - m / 2))
            throw std::logic_error("qdepth(I) fell below max{1, n - m/2}");
    }
}

} // namespace

QDepthReport qdepth_from_alpha(const AlphaVector& alpha) {
    if (alpha.is_empty_poset())
        throw DomainError("the module is zero: its poset is empty");
    const std::size_t lo = alpha.min_support();
    const std::size_t hi = alpha.max_support();

    // Scan every level from the top; the first feasible one is the maximum.
    std::optional<std::size_t> found;
    for (std::size_t d = alpha.n + 1; d-- > 0;) {
        if (beta_feasible(alpha, d)) {
            found = d;
            break;
        }
    }
    if (!found)
        throw std::logic_error("no feasible level, impossible for a nonempty poset");
    if (*found < lo || *found > hi)
        throw std::logic_error("qdepth escaped the [min-support, max-support] bounds");

    QDepthReport report;
    report.value = static_cast<long long>(*found);
    report.n_effective = alpha.n;
    report.n_added = 0;
    report.witness = beta_table(alpha, *found);
    if (*found < alpha.n) {
        auto neg = beta_first_negative(alpha, *found + 1);
        if (!neg)
            throw std::logic_error("level above the maximum is feasible");
        report.blocker = BetaBlocker{neg->k, std::move(neg->value)};
    }
    return report;
}

QDepthReport qdepth_squarefree(const MonomialIdeal& J, const MonomialIdeal& I,
                               const Limits& limits) {
    QDepthReport report = qdepth_from_alpha(alpha_vector(build_poset(J, I, limits)));
    assertShapeBounds(report, J, I, J.nvars());
    return report;
}

QDepthReport qdepth(const MonomialIdeal& J, const MonomialIdeal& I, const Limits& limits) {
    if (J.nvars() != I.nvars())
        throw DomainError("ideals live in different rings");
    if (!J.contains_ideal(I))
        throw DomainError("I is not contained in J");
    const PolarizedPair pp = polarize_pair(I, J);
    QDepthReport report = qdepth_from_alpha(alpha_vector(build_poset(pp.upper, pp.lower, limits)));
    report.value -= static_cast<long long>(pp.added);
    report.n_added = pp.added;
    assertShapeBounds(report, J, I, J.nvars());
    return report;
}

bool check_extension_shift(const MonomialIdeal& J, const MonomialIdeal& I, const Limits& limits) {
    const QDepthReport base = qdepth(J, I, limits);
    const QDepthReport extended = qdepth(extend_ambient(J, 1), extend_ambient(I, 1), limits);
    return extended.value == base.value + 1;
}

SandwichReport check_regular_sandwich(const MonomialIdeal& I, const Monomial& u,
                                      const Limits& limits) {
    const std::size_t n = I.nvars();
    if (u.nvars() != n)
        throw DomainError("u lives in a different ring");
    if (u.is_unit())
        throw DomainError("u must be a non-unit monomial");
    for (const Monomial& g : I.generators())
        for (std::size_t i = 1; i <= n; ++i)
            if (u.exponent(i) > 0 && g.exponent(i) > 0)
                throw DomainError("u shares the variable x" + std::to_string(i) +
                                  " with a generator, so it is a zerodivisor on S/I");

    const MonomialIdeal unit = MonomialIdeal::unit(n);
    std::vector<Monomial> withU = I.generators();
    withU.push_back(u);

    SandwichReport report;
    report.base = qdepth(unit, I, limits).value;
    report.with_u = qdepth(unit, MonomialIdeal(n, std::move(withU)), limits).value;
    report.floor_bound = report.base - 1;
    report.variable_case = u.degree() == 1;

    if (report.with_u > report.base || report.with_u < report.floor_bound)
        throw std::logic_error("regular-element sandwich violated");
    if (report.variable_case && report.with_u != report.floor_bound)
        throw std::logic_error("killing a single variable must drop qdepth by exactly 1");

    // Diagnostic only. Evaluated in the subring away from supp(u), which is
    // exactly the setting where u is the product of all remaining variables.
    if (u.is_squarefree() && u.support_size() < n) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 1; i <= n; ++i)
            if (u.exponent(i) == 0)
                keep.push_back(i);
        const MonomialIdeal Iprime = restrict_to_variables(I, keep);
        const AlphaVector aPrime =
            alpha_vector(build_poset(MonomialIdeal::unit(keep.size()), Iprime, limits));
        if (!aPrime.is_empty_poset()) {
            const auto d = static_cast<std::size_t>(qdepth_from_alpha(aPrime).value);
            const auto s = u.degree();
            BigInt betaAt = 0; // beta_{d+1-s}^{d}, index below 0 reads as 0
            if (d + 1 >= s) {
                const std::size_t idx = d + 1 - static_cast<std::size_t>(s);
                if (idx <= d)
                    betaAt = beta_closed(aPrime, d, idx);
            }
            report.collapse_hint = aPrime.at_or_zero(d + 1) < betaAt;
        }
    }
    return report;
}

BetaTable beta_adjoin_fresh_product(const MonomialIdeal& Iprime, std::size_t s, std::size_t d,
                                    const Limits& limits) {
    if (s < 1)
        throw DomainError("the fresh product needs at least one variable");
    const std::size_t m = Iprime.nvars();
    const std::size_t n = m + s;

    const AlphaVector aPrime =
        alpha_vector(build_poset(MonomialIdeal::unit(m), Iprime, limits));
    const BetaTable btPrime = beta_table(aPrime, d);

    // alpha of S/(I'S + (u)): extension by s variables convolves with C(s, *),
    // and the members divisible by u are the members of S'/I' shifted up by s.
    AlphaVector aQuot(n);
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt v = 0;
        for (std::size_t j = 0; j <= std::min(k, m); ++j)
            v += binomial(static_cast<long long>(s), static_cast<long long>(k - j)) *
                 aPrime.counts[j];
        if (k >= s)
            v -= aPrime.at_or_zero(k - s);
        aQuot.counts[k] = v;
    }

    std::vector<BigInt> entries(d + s + 1);
    for (std::size_t k = 0; k <= d + s; ++k) {
        BigInt v;
        if (k <= d) {
            v = btPrime.entries[k];
        } else {
            v = 0;
            for (std::size_t l = 0; l + d + 1 <= k; ++l)
                v += binomial(static_cast<long long>(k - d - 1), static_cast<long long>(l)) *
                     aPrime.at_or_zero(d + 1 + l);
        }
        if (k >= s)
            v -= btPrime.entries[k - s];
        entries[k] = std::move(v);
    }
    return beta_table_from_entries(d + s, std::move(entries), std::move(aQuot));
}

LowerBounds qdepth_lower_bounds(const MonomialIdeal& I) {
    const auto n = static_cast<long long>(I.nvars());
    const auto m = static_cast<long long>(I.generator_count());
    return {n - m, std::max<long long>(1, n - m / 2)};
}

} // namespace qdepth
