#include "qdepth/parse.hpp"
#include "qdepth/polarize.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qdepth;

TEST_CASE("squarefree ideals pass through unchanged") {
    const MonomialIdeal I = parse_ideal("x1*x2, x3", 3);
    const PolarizationResult r = polarize(I);
    CHECK(r.added == 0);
    CHECK(r.var_map.empty());
    CHECK(r.ideal == I);

    CHECK(polarize(MonomialIdeal::zero(3)).added == 0);
    CHECK(polarize(MonomialIdeal::unit(3)).added == 0);
}

TEST_CASE("mixed powers polarize to the documented squarefree ideal") {
    const MonomialIdeal I = parse_ideal("x1^2, x1*x2^2", 2);
    const PolarizationResult r = polarize(I);

    // g = lcm = x1^2 x2^2, so one replica per variable: N = 2.
    CHECK(r.added == 2);
    CHECK(r.ideal.nvars() == 4);
    CHECK(r.ideal.is_squarefree());
    CHECK(r.ideal.generator_count() == 2);
    // x1^2 -> x1 * x1,2 and the replicas sit after x2 in (original, copy) order:
    // x1,2 at position 3, x2,2 at position 4.
    CHECK(r.ideal.text() == "x1*x3, x1*x2*x4");

    REQUIRE(r.var_map.size() == 2);
    CHECK(r.var_map[0].original == 1);
    CHECK(r.var_map[0].copy == 2);
    CHECK(r.var_map[0].index == 3);
    CHECK(r.var_map[1].original == 2);
    CHECK(r.var_map[1].copy == 2);
    CHECK(r.var_map[1].index == 4);
}

TEST_CASE("replica count is the sum of exponent excesses") {
    const MonomialIdeal I = parse_ideal("x1^3*x2, x3^4", 3);
    // g = x1^3 x2 x3^4: N = 2 + 0 + 3.
    const PolarizationResult r = polarize(I);
    CHECK(r.added == 5);
    CHECK(r.ideal.nvars() == 8);
    CHECK(r.ideal.generator_count() == I.generator_count());
    // Replica order: x1,2 x1,3 then x3,2 x3,3 x3,4.
    REQUIRE(r.var_map.size() == 5);
    CHECK(r.var_map[0].original == 1);
    CHECK(r.var_map[1].original == 1);
    CHECK(r.var_map[1].copy == 3);
    CHECK(r.var_map[2].original == 3);
    CHECK(r.var_map[4].index == 8);
}

TEST_CASE("polarizing preserves degrees") {
    const MonomialIdeal I = parse_ideal("x1^4, x1^2*x2^2, x2^3", 2);
    const PolarizationResult r = polarize(I);
    REQUIRE(r.ideal.generator_count() == I.generator_count());
    for (std::size_t i = 0; i < I.generator_count(); ++i)
        CHECK(r.ideal.generators()[i].degree() == I.generators()[i].degree());
}

TEST_CASE("pairs polarize against the joint exponent lcm") {
    const MonomialIdeal I = parse_ideal("x1^2", 2);
    const MonomialIdeal J = parse_ideal("x1^2, x2^3", 2);
    const PolarizedPair pp = polarize_pair(I, J);

    // Joint g = x1^2 x2^3: one replica of x1, two of x2.
    CHECK(pp.added == 3);
    CHECK(pp.lower.nvars() == 5);
    CHECK(pp.upper.nvars() == 5);
    // I alone would polarize into 3 variables; the joint run must keep both
    // sides in the same 5-variable ring with aligned replica slots.
    CHECK(pp.lower.text() == "x1*x3");
    CHECK(pp.upper.text() == "x1*x3, x2*x4*x5");
    CHECK(pp.upper.contains_ideal(pp.lower));

    CHECK_THROWS_AS(polarize_pair(I, parse_ideal("x1", 3)), std::invalid_argument);
}

TEST_CASE("pairs with trivial sides stay aligned") {
    const MonomialIdeal I = parse_ideal("x1^2, x1*x2^2", 2);

    const PolarizedPair againstUnit = polarize_pair(I, MonomialIdeal::unit(2));
    CHECK(againstUnit.added == 2);
    CHECK(againstUnit.upper.is_unit());
    CHECK(againstUnit.upper.nvars() == 4);
    CHECK(againstUnit.lower.text() == "x1*x3, x1*x2*x4");

    const PolarizedPair aboveZero = polarize_pair(MonomialIdeal::zero(2), I);
    CHECK(aboveZero.added == 2);
    CHECK(aboveZero.lower.is_zero());
    CHECK(aboveZero.lower.nvars() == 4);
    CHECK(aboveZero.upper.text() == "x1*x3, x1*x2*x4");
}
