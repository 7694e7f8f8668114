#include "qdepth/json_io.hpp"
#include "qdepth/parse.hpp"

#include <doctest.h>

using namespace qdepth;

TEST_CASE("big integers serialize as decimal strings") {
    AlphaVector a(2);
    a.counts = {1, BigInt("123456789012345678901234567890"), 0};
    const Json j = to_json(a);
    CHECK(j["n"] == 2);
    CHECK(j["counts"][1] == "123456789012345678901234567890");
    CHECK(j["counts"][1].is_string());
}

TEST_CASE("beta table shape") {
    AlphaVector a(4);
    a.counts = {1, 4, 5, 1, 0};
    const Json j = to_json(beta_table(a, 3));
    CHECK(j["d"] == 3);
    CHECK(j["entries"] == Json::array({"1", "1", "0", "-1"}));
    CHECK(j["nonnegative"] == false);
}

TEST_CASE("qdepth report omits the blocker at the top level") {
    const Json blocked =
        to_json(qdepth::qdepth(MonomialIdeal::unit(2), parse_ideal("x1^2, x1*x2^2", 2)));
    CHECK(blocked["value"] == 0);
    CHECK(blocked["n_added"] == 2);
    CHECK(blocked["witness"] == Json::array({"1", "2", "2"}));
    REQUIRE(blocked.contains("blocker"));
    CHECK(blocked["blocker"]["k"] == 3);
    CHECK(blocked["blocker"]["value"] == "-1");

    const Json top = to_json(qdepth::qdepth(MonomialIdeal::unit(3), MonomialIdeal::zero(3)));
    CHECK(top["value"] == 3);
    CHECK_FALSE(top.contains("blocker"));
}

TEST_CASE("sdepth witness intervals use 1-based indices") {
    const Json j = to_json(sdepth(parse_ideal("x1*x2*x3", 3), MonomialIdeal::zero(3)));
    CHECK(j["value"] == 3);
    REQUIRE(j["witness"]["intervals"].size() == 1);
    CHECK(j["witness"]["intervals"][0]["lower"] == Json::array({1, 2, 3}));
    CHECK(j["witness"]["intervals"][0]["upper"] == Json::array({1, 2, 3}));
}

TEST_CASE("scan cells in json and csv") {
    ScanCell cell;
    conjecture_scan(1, 2, [&](const ScanCell& c) { cell = c; }); // keeps the last cell
    CHECK(cell.m == 1);
    CHECK(cell.q == 2);
    CHECK(cell.t == 2);
    const Json j = to_json(cell);
    CHECK(j["n"] == 5);
    CHECK(j["E"] == "5");
    CHECK(j["holds"] == true);
    CHECK(j["proof_status"] == "m1-case");

    CHECK(scan_csv_header() == "m,q,t,n,E,holds,proof_status");
    CHECK(scan_csv_row(cell) == "1,2,2,5,5,true,m1-case");
}

TEST_CASE("ci symmetry report shape") {
    const Json j = to_json(ci_symmetry(3, {2}));
    CHECK(j["n"] == 3);
    CHECK(j["m"] == 1);
    CHECK(j["degs"] == Json::array({2}));
    CHECK(j["full_support"] == false);
    CHECK(j["endpoint"] == "0");
    CHECK(j["all_hold"] == false);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["d"] == 3);
    CHECK(j["checks"][0]["violations"][0]["k"] == 0);
    CHECK(j["checks"][0]["violations"][0]["sum"] == "1");
}

TEST_CASE("polarization json carries both ring sizes") {
    const MonomialIdeal I = parse_ideal("x1^2, x1*x2^2", 2);
    const Json j = to_json(polarize(I), I.nvars());
    CHECK(j["n_original"] == 2);
    CHECK(j["n_effective"] == 4);
    CHECK(j["added"] == 2);
    CHECK(j["generators"] == Json::array({"x1*x3", "x1*x2*x4"}));
    CHECK(j["var_map"][0]["index"] == 3);

    const Json p = to_json(polarize_pair(I, MonomialIdeal::unit(2)), I.nvars());
    CHECK(p["lower_generators"] == Json::array({"x1*x3", "x1*x2*x4"}));
    CHECK(p["upper_generators"] == Json::array({"1"}));
}

TEST_CASE("serialization is deterministic") {
    const Json a = to_json(qdepth_veronese(6, 2));
    const Json b = to_json(qdepth_veronese(6, 2));
    CHECK(a.dump() == b.dump());
    // Insertion order is part of the contract.
    CHECK(a.dump().find("\"n\":") < a.dump().find("\"value\":"));
}

TEST_CASE("masks decode to sorted 1-based indices") {
    CHECK(mask_to_indices(0) == std::vector<std::size_t>{});
    CHECK(mask_to_indices(0b1011) == std::vector<std::size_t>{1, 2, 4});
    CHECK(mask_to_indices(uint64_t(1) << 61) == std::vector<std::size_t>{62});
}
