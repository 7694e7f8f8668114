#include "qdepth/ci.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/escan.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/random_instances.hpp"
#include "qdepth/veronese.hpp"

#include <doctest.h>

#include <stdexcept>
#include <tuple>
#include <vector>

using namespace qdepth;

TEST_CASE("Veronese ideal generators") {
    const MonomialIdeal v42 = veronese_ideal(4, 2);
    CHECK(v42.generator_count() == 6);
    CHECK(v42.is_squarefree());
    for (const Monomial& g : v42.generators())
        CHECK(g.degree() == 2);

    CHECK(veronese_ideal(5, 5).generator_count() == 1);
    CHECK_THROWS_AS(veronese_ideal(3, 4), DomainError);
}

TEST_CASE("Veronese alpha closed form matches enumeration") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            const MonomialIdeal J = veronese_ideal(n, m);
            const AlphaVector quotClosed = alpha_veronese(n, m, ModuleMode::quotient);
            const AlphaVector quotEnum =
                alpha_vector(build_poset(MonomialIdeal::unit(n), J));
            CHECK(quotClosed.counts == quotEnum.counts);

            const AlphaVector idealClosed = alpha_veronese(n, m, ModuleMode::ideal);
            const AlphaVector idealEnum = alpha_vector(build_poset(J, MonomialIdeal::zero(n)));
            CHECK(idealClosed.counts == idealEnum.counts);
        }
    }
}

TEST_CASE("Veronese qdepth report") {
    const VeroneseReport r = qdepth_veronese(4, 2);
    CHECK(r.q == 0);
    CHECK(r.value == 2);
    CHECK(r.quotient_value == 1);
    CHECK(r.upper_bound == 2);
    CHECK(r.in_theorem_region);

    // m = 1 is the maximal ideal: value climbs like ceil(n/2).
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(qdepth_veronese(n, 1).value == static_cast<long long>((n + 1) / 2));

    // Small n pins the value at m.
    CHECK(qdepth_veronese(6, 3).value == 3);
    CHECK(qdepth_veronese(8, 4).value == 4);
}

TEST_CASE("E goldens and guards") {
    CHECK(E_value(2, 1, 1, 5) == 0);
    CHECK(E_value(1, 2, 2, 5) == 5);
    CHECK(E_value(2, 3, 2, 11) == 165);

    CHECK_THROWS_AS(E_value(0, 1, 1, 3), DomainError);
    CHECK_THROWS_AS(E_value(1, 1, 2, 3), DomainError); // t > q
    CHECK_THROWS_AS(E_value(1, 0, 0, 3), DomainError);
}

TEST_CASE("E recursions and product form agree with the direct sum") {
    for (long long m = 1; m <= 3; ++m) {
        for (long long q = 1; q <= 6; ++q) {
            for (long long t = 1; t <= q; ++t) {
                const long long critical = m * q + m + q;
                for (long long n : {critical, critical + 2}) {
                    const BigInt direct = E_value(m, q, t, n);
                    CHECK(E_rec_q(m, q, t, n) == direct);
                    CHECK(E_rec_n(m, q, t, n) == direct);
                }
                CHECK(E_product_form(m, q, t) == E_value(m, q, t, critical));
            }
        }
    }
}

TEST_CASE("gamma terms and their ratios") {
    CHECK(gamma_term(2, 3, 2, 0, 11) == binomial(3, 2) * binomial(11, 2));
    CHECK(gamma_term(2, 3, 2, 2, 11) == binomial(11, 4));

    CHECK(alpha_ratio(3, 7, 4, 0) == BigRat(4));

    // Ratios are non-increasing in j, so the terms of E peak once.
    for (long long m = 1; m <= 4; ++m) {
        for (long long q = 1; q <= 7; ++q) {
            for (long long t = 1; t <= q; ++t) {
                CHECK(alpha_ratio(m, q, t, 0) == BigRat(t));
                for (long long j = 0; j + 2 <= t; ++j)
                    CHECK(alpha_ratio(m, q, t, j) >= alpha_ratio(m, q, t, j + 1));
            }
        }
    }
}

TEST_CASE("cell classification order") {
    CHECK(classify_cell(1, 9, 5) == "m1-case");
    CHECK(classify_cell(2, 5, 1) == "t1-lemma");
    CHECK(classify_cell(3, 4, 4) == "t-eq-q-lemma");
    CHECK(classify_cell(2, 4, 3) == "q-small");
    CHECK(classify_cell(2, 8, 3) == "t-le-4");
    CHECK(classify_cell(2, 9, 5) == "open");
    CHECK(classify_cell(4, 12, 5) == "open");
}

TEST_CASE("scan visits the grid in order and finds no violations") {
    std::vector<ScanCell> cells;
    conjecture_scan(2, 5, [&](const ScanCell& c) { cells.push_back(c); });
    CHECK(cells.size() == 2 * 15);

    for (std::size_t i = 0; i < cells.size(); ++i) {
        const ScanCell& c = cells[i];
        CHECK(c.n == c.m * c.q + c.m + c.q);
        CHECK(c.holds);
        CHECK(c.E >= 0);
        CHECK(c.E == E_value(c.m, c.q, c.t, c.n));
        if (i > 0) {
            const ScanCell& p = cells[i - 1];
            CHECK(std::tie(p.m, p.q, p.t) < std::tie(c.m, c.q, c.t));
        }
    }
}

TEST_CASE("CI symmetry full versus partial support") {
    const CISymmetryReport full = ci_symmetry(2, {1, 1});
    CHECK(full.full_support);
    CHECK(full.endpoint == -1);
    CHECK(full.all_hold);
    REQUIRE(full.checks.size() == 2);
    CHECK(full.checks[0].d == 1);
    CHECK(full.checks[1].d == 3);

    const CISymmetryReport partial = ci_symmetry(3, {2});
    CHECK_FALSE(partial.full_support);
    CHECK(partial.endpoint == 0);
    CHECK_FALSE(partial.all_hold);
    REQUIRE(partial.checks.size() == 1); // n - m + 1 == n + m - 1 == 3
    CHECK_FALSE(partial.checks[0].holds);
    CHECK(partial.checks[0].violations.size() == 2);
    CHECK(partial.checks[0].violations[0].k == 0);
    CHECK(partial.checks[0].violations[0].sum == 1);

    const CISymmetryReport at2 = ci_symmetry(3, {2}, 2);
    REQUIRE(at2.checks.size() == 1);
    CHECK(at2.checks[0].d == 2);
}

TEST_CASE("CI qdepth equals n minus m") {
    const CIQDepthCheck c = ci_qdepth_check(8, {1, 1, 1, 1, 2, 2});
    CHECK(c.value == 2);
    CHECK(c.expected == 2);

    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + draw_index(rng, 9); // 2..10
        const std::size_t m = 1 + draw_index(rng, n);
        const std::vector<uint32_t> degs = random_full_support_degrees(rng, n, m);
        const CIQDepthCheck check = ci_qdepth_check(n, degs);
        CHECK(check.value == static_cast<long long>(n - m));
        const CISymmetryReport sym = ci_symmetry(n, degs);
        CHECK(sym.full_support);
        CHECK(sym.endpoint == -1);
    }
}
