#include "selftest.hpp"

#include "qdepth/alpha.hpp"
#include "qdepth/beta.hpp"
#include "qdepth/ci.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/escan.hpp"
#include "qdepth/ideal.hpp"
#include "qdepth/parse.hpp"
#include "qdepth/polarize.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/qdepth.hpp"
#include "qdepth/random_instances.hpp"
#include "qdepth/sdepth.hpp"
#include "qdepth/veronese.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdepth::selftest {

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) {
        throw Failure(what);
    }
}

template <typename T, typename U>
void expectEq(const T& got, const U& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", want " << want;
        throw Failure(msg.str());
    }
}

AlphaVector makeAlpha(std::vector<long long> counts) {
    AlphaVector alpha;
    alpha.n = counts.size() - 1;
    alpha.counts.assign(counts.begin(), counts.end());
    return alpha;
}

void expectCounts(const std::vector<BigInt>& got, const std::vector<long long>& want,
                  const std::string& what) {
    expectEq(got.size(), want.size(), what + " (length)");
    for (std::size_t i = 0; i < want.size(); ++i) {
        expectEq(got[i], BigInt(want[i]), what + "[" + std::to_string(i) + "]");
    }
}

struct Context {
    Rng rng;
    std::size_t samples = 0;
    Limits limits;
};

// ---- golden checks ----

void betaTableSmall(Context&) {
    const AlphaVector alpha = makeAlpha({1, 4, 5, 1});
    expectCounts(beta_table(alpha, 2).entries, {1, 2, 2}, "beta at d=2");
    expectCounts(beta_table(alpha, 3).entries, {1, 1, 0, -1}, "beta at d=3");
    expectEq(beta_closed(alpha, 3, 3), BigInt(-1), "closed form at (3,3)");
    const auto neg = beta_first_negative(alpha, 3);
    expect(neg.has_value(), "level 3 must have a negative entry");
    expectEq(neg->k, std::size_t{3}, "first negative index");
    expectCounts(alpha_from_beta(beta_table(alpha, 3)).counts, {1, 4, 5, 1},
                 "alpha from beta roundtrip");
}

void betaFullLattice(Context&) {
    AlphaVector alpha(5);
    for (std::size_t k = 0; k <= 5; ++k) {
        alpha.counts[k] = binomial(5, static_cast<long long>(k));
    }
    expectCounts(beta_table(alpha, 5).entries, {1, 0, 0, 0, 0, 0}, "full lattice beta");
}

void polarizeMixedPowers(Context& ctx) {
    const MonomialIdeal ideal = parse_ideal("x1^2, x1*x2^2", 2);
    const PolarizationResult pol = polarize(ideal);
    expectEq(pol.added, std::size_t{2}, "added variables");
    expectEq(pol.ideal.nvars(), std::size_t{4}, "polarized ambient");
    expect(pol.ideal.is_squarefree(), "polarization must be squarefree");
    expectEq(pol.ideal.generator_count(), std::size_t{2}, "generator count preserved");

    const PolarizedPair pair = polarize_pair(ideal, MonomialIdeal::unit(2));
    const AlphaVector alpha = alpha_vector(build_poset(pair.upper, pair.lower, ctx.limits));
    expectCounts(alpha.counts, {1, 4, 5, 1, 0}, "polarized quotient alpha");

    const QDepthReport report = qdepth(MonomialIdeal::unit(2), ideal, ctx.limits);
    expectEq(report.value, 0LL, "qdepth of the mixed-power quotient");
    expectEq(report.n_added, std::size_t{2}, "report n_added");
    expectEq(report.n_effective, std::size_t{4}, "report n_effective");
    expectCounts(report.witness.entries, {1, 2, 2}, "witness table");
    expect(report.blocker.has_value(), "blocker must be present");
    expectEq(report.blocker->k, std::size_t{3}, "blocker index");
    expectEq(report.blocker->value, BigInt(-1), "blocker value");
}

void pathIdealGoldens(Context& ctx) {
    const MonomialIdeal path = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5", 6);
    expectEq(qdepth(MonomialIdeal::unit(6), path, ctx.limits).value, 3LL, "quotient by the path");
    expectEq(qdepth(path, MonomialIdeal::zero(6), ctx.limits).value, 5LL, "the path ideal");

    const MonomialIdeal shifted = parse_ideal("x1*x2*x6, x2*x3*x6, x3*x4*x6, x4*x5*x6", 6);
    expectEq(qdepth(MonomialIdeal::unit(6), shifted, ctx.limits).value, 4LL,
             "quotient by x6 times the path");
    expectEq(qdepth(shifted, MonomialIdeal::zero(6), ctx.limits).value, 5LL, "x6 times the path");
}

void pentagonColonGoldens(Context& ctx) {
    const MonomialIdeal cycle = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1", 6);
    const MonomialIdeal stretched = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1*x6", 6);
    expectEq(qdepth(cycle, MonomialIdeal::zero(6), ctx.limits).value, 5LL, "five-cycle ideal");
    expectEq(qdepth(stretched, MonomialIdeal::zero(6), ctx.limits).value, 4LL,
             "stretched five-cycle ideal");
}

void intersectionOfPrimes(Context& ctx) {
    // (x1,x2) cap (x3,x4) cap (x5,x6,x7): one variable from each block.
    std::vector<Monomial> gens;
    for (std::size_t a : {0, 1}) {
        for (std::size_t b : {2, 3}) {
            for (std::size_t c : {4, 5, 6}) {
                gens.push_back(Monomial::squarefree(
                    7, (uint64_t(1) << a) | (uint64_t(1) << b) | (uint64_t(1) << c)));
            }
        }
    }
    const MonomialIdeal inner(7, gens);
    expectEq(inner.generator_count(), std::size_t{12}, "generator count");
    expectEq(qdepth(MonomialIdeal::unit(7), inner, ctx.limits).value, 3LL,
             "quotient by the intersection");

    std::vector<Monomial> bigger = extend_ambient(inner, 2).generators();
    bigger.push_back(Monomial::squarefree(9, (uint64_t(1) << 7) | (uint64_t(1) << 8)));
    const MonomialIdeal withProduct(9, bigger);
    expectEq(qdepth(MonomialIdeal::unit(9), withProduct, ctx.limits).value, 5LL,
             "after adjoining x8*x9");
}

void ciBlockRemark(Context& ctx) {
    const MonomialIdeal ci = parse_ideal("x1, x2, x3, x4, x5*x6, x7*x8", 8);
    expectEq(qdepth(ci, MonomialIdeal::zero(8), ctx.limits).value, 6LL,
             "complete intersection ideal in 8 variables");
    expectEq(ci_qdepth_check(8, {1, 1, 1, 1, 2, 2}).value, 2LL, "its quotient");
}

void veroneseSmall(Context& ctx) {
    const MonomialIdeal j42 = veronese_ideal(4, 2);
    expectEq(j42.generator_count(), std::size_t{6}, "C(4,2) generators");
    for (const Monomial& g : j42.generators()) {
        expect(g.is_squarefree() && g.degree() == 2, "degree-2 squarefree generator");
    }
    expectEq(veronese_ideal(3, 1).generator_count(), std::size_t{3}, "maximal ideal generators");
    expectEq(veronese_ideal(5, 5).generator_count(), std::size_t{1}, "single top generator");

    const AlphaVector quot = alpha_veronese(4, 2, ModuleMode::quotient);
    expectCounts(quot.counts, {1, 4, 0, 0, 0}, "closed-form quotient alpha");
    const AlphaVector idl = alpha_veronese(4, 2, ModuleMode::ideal);
    expectCounts(idl.counts, {0, 0, 6, 4, 1}, "closed-form ideal alpha");

    expectCounts(alpha_vector(build_poset(MonomialIdeal::unit(4), j42, ctx.limits)).counts,
                 {1, 4, 0, 0, 0}, "enumerated quotient alpha");
    expectCounts(alpha_vector(build_poset(j42, MonomialIdeal::zero(4), ctx.limits)).counts,
                 {0, 0, 6, 4, 1}, "enumerated ideal alpha");

    const VeroneseReport report = qdepth_veronese(4, 2);
    expectEq(report.value, 2LL, "qdepth of J_{4,2}");
    expectEq(report.quotient_value, 1LL, "qdepth of S/J_{4,2}");
}

void veroneseMaximalIdeal(Context&) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const VeroneseReport report = qdepth_veronese(n, 1);
        expectEq(report.value, static_cast<long long>((n + 1) / 2),
                 "qdepth of the maximal ideal, n=" + std::to_string(n));
    }
}

void eGoldens(Context&) {
    expectEq(E_value(2, 1, 1, 5), BigInt(0), "E(2,1,1,5)");
    expectEq(E_value(1, 2, 2, 5), BigInt(5), "E(1,2,2,5)");
    expectEq(E_product_form(1, 2, 2), BigInt(5), "product form at (1,2,2)");
    expectEq(E_value(2, 3, 2, 11), BigInt(165), "E(2,3,2,11)");
    expectEq(E_product_form(2, 3, 2), BigInt(165), "product form at (2,3,2)");
    expectEq(alpha_ratio(3, 7, 4, 0), BigRat(4), "alpha ratio at j=0");

    expectEq(classify_cell(1, 9, 7), std::string("m1-case"), "classify (1,9,7)");
    expectEq(classify_cell(2, 5, 1), std::string("t1-lemma"), "classify (2,5,1)");
    expectEq(classify_cell(3, 4, 4), std::string("t-eq-q-lemma"), "classify (3,4,4)");
    expectEq(classify_cell(2, 4, 3), std::string("q-small"), "classify (2,4,3)");
    expectEq(classify_cell(2, 7, 4), std::string("t-le-4"), "classify (2,7,4)");
    expectEq(classify_cell(2, 9, 5), std::string("open"), "classify (2,9,5)");
}

void ciSymmetryTiny(Context&) {
    const CISymmetryReport full = ci_symmetry(2, {1, 1});
    expect(full.full_support, "degrees 1,1 fill two variables");
    expectEq(full.endpoint, BigInt(-1), "endpoint");
    expectEq(full.checks.size(), std::size_t{2}, "levels tested");
    expect(full.all_hold, "antisymmetry at both levels");

    const CISymmetryReport partial = ci_symmetry(3, {2});
    expect(!partial.full_support, "degree 2 leaves a free variable");
    expectEq(partial.endpoint, BigInt(0), "partial-support endpoint");
    expect(!partial.all_hold, "antisymmetry must fail off full support");
}

void sdepthGoldens(Context& ctx) {
    const SDepthReport lattice =
        sdepth(MonomialIdeal::unit(4), MonomialIdeal::zero(4), ctx.limits);
    expectEq(lattice.value, 4LL, "full lattice");
    expectEq(lattice.witness.intervals.size(), std::size_t{1}, "single interval");

    expectEq(sdepth(veronese_ideal(3, 1), MonomialIdeal::zero(3), ctx.limits).value, 2LL,
             "maximal ideal, n=3");
    expectEq(sdepth(MonomialIdeal::unit(5), veronese_ideal(5, 3), ctx.limits).value, 2LL,
             "S/J_{5,3}");

    const SDepthReport mixed =
        sdepth(MonomialIdeal::unit(2), parse_ideal("x1^2, x1*x2^2", 2), ctx.limits);
    expectEq(mixed.value, 0LL, "mixed-power quotient");
    expectEq(mixed.n_added, std::size_t{2}, "polarization count");
}

// ---- property suites ----

void propAlphaBetaRoundtrip(Context& ctx) {
    for (std::size_t i = 0; i < ctx.samples; ++i) {
        const std::size_t n = 1 + draw_index(ctx.rng, 8);
        const AlphaVector alpha = random_alpha(ctx.rng, n, 9);
        const std::size_t d = draw_index(ctx.rng, 9);
        const BetaTable bt = beta_table(alpha, d);
        const AlphaVector back = alpha_from_beta(bt);
        for (std::size_t k = 0; k <= d; ++k) {
            expectEq(back.at_or_zero(k), alpha.at_or_zero(k),
                     "roundtrip entry k=" + std::to_string(k));
            expectEq(beta_closed(alpha, d, k), bt.entries[k],
                     "closed form k=" + std::to_string(k));
        }
        expectEq(beta_feasible(alpha, d), bt.nonnegative(), "feasibility flag");
        beta_table_from_entries(d, bt.entries, alpha); // must validate cleanly
    }
}

void propInclusionExclusion(Context& ctx) {
    for (std::size_t i = 0; i < ctx.samples; ++i) {
        const std::size_t n = 1 + draw_index(ctx.rng, 6);
        const MonomialIdeal ideal = random_squarefree_ideal(ctx.rng, n, 5);
        const AlphaVector ieQuot = alpha_by_inclusion_exclusion(ideal, ModuleMode::quotient);
        const AlphaVector enumQuot =
            alpha_vector(build_poset(MonomialIdeal::unit(n), ideal, ctx.limits));
        for (std::size_t k = 0; k <= n; ++k) {
            expectEq(ieQuot.counts[k], enumQuot.counts[k],
                     "quotient alpha k=" + std::to_string(k));
        }
        const AlphaVector ieIdeal = alpha_by_inclusion_exclusion(ideal, ModuleMode::ideal);
        const AlphaVector enumIdeal =
            alpha_vector(build_poset(ideal, MonomialIdeal::zero(n), ctx.limits));
        for (std::size_t k = 0; k <= n; ++k) {
            expectEq(ieIdeal.counts[k], enumIdeal.counts[k],
                     "ideal alpha k=" + std::to_string(k));
        }

        const IdealPair pair = random_nested_squarefree_pair(ctx.rng, n, 4);
        const AlphaVector iePair = alpha_quotient_pair(pair.upper, pair.lower, ctx.limits);
        const AlphaVector enumPair =
            alpha_vector(build_poset(pair.upper, pair.lower, ctx.limits));
        for (std::size_t k = 0; k <= n; ++k) {
            expectEq(iePair.counts[k], enumPair.counts[k], "pair alpha k=" + std::to_string(k));
        }
    }
}

void propExtensionShift(Context& ctx) {
    std::size_t done = 0;
    while (done < ctx.samples) {
        const std::size_t n = 1 + draw_index(ctx.rng, 5);
        const IdealPair pair = random_nested_squarefree_pair(ctx.rng, n, 3);
        if (alpha_vector(build_poset(pair.upper, pair.lower, ctx.limits)).is_empty_poset()) {
            continue; // J/I is the zero module; qdepth is undefined
        }
        expect(check_extension_shift(pair.upper, pair.lower, ctx.limits),
               "fresh variable must shift qdepth by exactly 1");
        ++done;
    }
}

void propRegularSandwich(Context& ctx) {
    std::size_t done = 0;
    while (done < ctx.samples) {
        const std::size_t n = 2 + draw_index(ctx.rng, 4); // 2..5
        const MonomialIdeal inner = random_squarefree_ideal(ctx.rng, n - 1, 4);
        if (inner.is_unit()) {
            continue;
        }
        const MonomialIdeal ideal = extend_ambient(inner, 1);
        const Monomial u = Monomial::variable(n, n);
        const SandwichReport report = check_regular_sandwich(ideal, u, ctx.limits);
        expect(report.variable_case, "u is one variable");
        expectEq(report.base - report.with_u, 1LL, "single variable drops qdepth by 1");

        if (n >= 3) {
            const MonomialIdeal deeper = extend_ambient(random_squarefree_ideal(ctx.rng, n - 2, 4), 2);
            if (!deeper.is_unit()) {
                std::vector<uint32_t> exps(n, 0);
                exps[n - 2] = 1;
                exps[n - 1] = 1;
                const Monomial prod(n, exps);
                check_regular_sandwich(deeper, prod, ctx.limits); // asserts internally
            }
        }
        ++done;
    }
}

void propSdepthLeQdepth(Context& ctx) {
    std::size_t done = 0;
    while (done < ctx.samples) {
        const std::size_t n = 1 + draw_index(ctx.rng, 5);
        const IdealPair pair = random_nested_squarefree_pair(ctx.rng, n, 3);
        if (alpha_vector(build_poset(pair.upper, pair.lower, ctx.limits)).is_empty_poset()) {
            continue;
        }
        const long long s = sdepth(pair.upper, pair.lower, ctx.limits).value;
        const long long q = qdepth(pair.upper, pair.lower, ctx.limits).value;
        expect(s <= q, "sdepth " + std::to_string(s) + " must not exceed qdepth " +
                           std::to_string(q));
        ++done;
    }
}

void propCiTheorems(Context& ctx) {
    for (std::size_t i = 0; i < ctx.samples; ++i) {
        const std::size_t n = 2 + draw_index(ctx.rng, 9); // 2..10
        const std::size_t m = 1 + draw_index(ctx.rng, std::min<std::size_t>(4, n));
        const std::vector<uint32_t> degs = random_full_support_degrees(ctx.rng, n, m);
        ci_qdepth_check(n, degs);          // asserts value = n - m
        const CISymmetryReport report = ci_symmetry(n, degs); // asserts the endpoint
        expect(report.full_support, "composition must fill the ring");

        if (n <= 6) {
            const MonomialIdeal ci = ci_ideal(n, degs);
            const AlphaVector closed = alpha_ci(n, degs, ModuleMode::quotient);
            const AlphaVector enumerated =
                alpha_vector(build_poset(MonomialIdeal::unit(n), ci, ctx.limits));
            for (std::size_t k = 0; k <= n; ++k) {
                expectEq(closed.counts[k], enumerated.counts[k],
                         "ci alpha k=" + std::to_string(k));
            }
        }
    }
}

void propScanEMini(Context&) {
    std::size_t cells = 0;
    std::size_t violations = 0;
    conjecture_scan(3, 6, [&](const ScanCell& cell) {
        ++cells;
        if (!cell.holds) {
            ++violations;
        }
    });
    expectEq(cells, std::size_t{63}, "cell count for m<=3, q<=6");
    expectEq(violations, std::size_t{0}, "violations");
}

void propVeroneseClosedForm(Context& ctx) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            const MonomialIdeal ideal = veronese_ideal(n, m);
            const AlphaVector quot = alpha_veronese(n, m, ModuleMode::quotient);
            const AlphaVector quotEnum =
                alpha_vector(build_poset(MonomialIdeal::unit(n), ideal, ctx.limits));
            const AlphaVector idl = alpha_veronese(n, m, ModuleMode::ideal);
            const AlphaVector idlEnum =
                alpha_vector(build_poset(ideal, MonomialIdeal::zero(n), ctx.limits));
            for (std::size_t k = 0; k <= n; ++k) {
                expectEq(quot.counts[k], quotEnum.counts[k],
                         "quotient alpha k=" + std::to_string(k));
                expectEq(idl.counts[k], idlEnum.counts[k],
                         "ideal alpha k=" + std::to_string(k));
            }
            qdepth_veronese(n, m); // internal assertions are the check
        }
    }
}

struct Check {
    const char* name;
    void (*fn)(Context&);
};

constexpr Check kChecks[] = {
    {"beta-table-small", betaTableSmall},
    {"beta-full-lattice", betaFullLattice},
    {"polarize-mixed-powers", polarizeMixedPowers},
    {"path-ideal-goldens", pathIdealGoldens},
    {"pentagon-colon-goldens", pentagonColonGoldens},
    {"intersection-of-primes", intersectionOfPrimes},
    {"ci-block-remark", ciBlockRemark},
    {"veronese-small", veroneseSmall},
    {"veronese-maximal-ideal", veroneseMaximalIdeal},
    {"e-goldens", eGoldens},
    {"ci-symmetry-tiny", ciSymmetryTiny},
    {"sdepth-goldens", sdepthGoldens},
    {"prop-alpha-beta-roundtrip", propAlphaBetaRoundtrip},
    {"prop-inclusion-exclusion", propInclusionExclusion},
    {"prop-extension-shift", propExtensionShift},
    {"prop-regular-sandwich", propRegularSandwich},
    {"prop-sdepth-le-qdepth", propSdepthLeQdepth},
    {"prop-ci-theorems", propCiTheorems},
    {"prop-scan-e-mini", propScanEMini},
    {"prop-veronese-closed-form", propVeroneseClosedForm},
};

} // namespace

int run(uint64_t seed, std::size_t samples, const Limits& limits) {
    int failures = 0;
    std::size_t index = 0;
    for (const Check& check : kChecks) {
        ++index;
        Context ctx{Rng(seed + 0x9e3779b97f4a7c15ULL * index), samples, limits};
        try {
            check.fn(ctx);
            std::cout << "PASS  " << check.name << "\n";
        } catch (const std::exception& e) {
            std::cout << "FAIL  " << check.name << ": " << e.what() << "\n";
            ++failures;
        }
    }
    const std::size_t total = sizeof(kChecks) / sizeof(kChecks[0]);
    std::cout << (total - static_cast<std::size_t>(failures)) << "/" << total
              << " checks passed\n";
    return failures;
}

} // namespace qdepth::selftest
