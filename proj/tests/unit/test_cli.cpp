#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
RunResult run(const std::string& args) {
    const std::string cmd = std::string(QDEPTH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json runJson(const std::string& args) {
    const RunResult r = run(args);
    REQUIRE_MESSAGE(r.exit_code == 0, r.out);
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("cli qdepth golden") {
    const auto j = runJson("qdepth --n 2 --ideal \"x1^2, x1*x2^2\"");
    CHECK(j["value"] == 0);
    CHECK(j["n_effective"] == 4);
    CHECK(j["n_added"] == 2);
    CHECK(j["witness"] == nlohmann::json::array({"1", "2", "2"}));
    CHECK(j["blocker"]["k"] == 3);

    const auto full = runJson("qdepth --n 4 --ideal \"\"");
    CHECK(full["value"] == 4);
}

TEST_CASE("cli module selection") {
    CHECK(runJson("qdepth --n 6 --module quotient --ideal \"x1*x2, x2*x3, x3*x4, x4*x5\"")["value"] == 3);
    CHECK(runJson("qdepth --n 6 --module ideal --ideal \"x1*x2, x2*x3, x3*x4, x4*x5\"")["value"] == 5);
    CHECK(runJson("qdepth --n 3 --module pair --ideal \"x1*x2\" --j-ideal \"x1, x2\"")["value"] >= 0);
}

TEST_CASE("cli alpha methods agree") {
    const auto a = runJson("alpha --n 4 --ideal \"x1*x2, x3*x4\"");
    const auto b = runJson("alpha --n 4 --ideal \"x1*x2, x3*x4\" --method ie");
    CHECK(a["counts"] == b["counts"]);
    CHECK(a["counts"] == nlohmann::json::array({"1", "4", "4", "0", "0"}));
}

TEST_CASE("cli beta golden") {
    const auto j = runJson("beta --alpha \"1,4,5,1\" --d 3");
    CHECK(j["entries"] == nlohmann::json::array({"1", "1", "0", "-1"}));
    CHECK(j["nonnegative"] == false);
}

TEST_CASE("cli sdepth golden") {
    const auto j = runJson("sdepth --n 3 --module ideal --ideal \"x1, x2, x3\"");
    CHECK(j["value"] == 2);
}

TEST_CASE("cli polarize golden") {
    const auto j = runJson("polarize --n 2 --ideal \"x1^2, x1*x2^2\"");
    CHECK(j["added"] == 2);
    CHECK(j["generators"] == nlohmann::json::array({"x1*x3", "x1*x2*x4"}));
}

TEST_CASE("cli veronese golden") {
    const auto j = runJson("veronese --n 6 --m 2");
    CHECK(j["value"] == 3);
    CHECK(j["quotient_value"] == 1);
}

TEST_CASE("cli scan-E emits csv") {
    const RunResult r = run("scan-E --m-max 1 --q-max 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "m,q,t,n,E,holds,proof_status");
    CHECK(r.out.find("1,2,2,5,5,true,m1-case") != std::string::npos);
}

TEST_CASE("cli ci-symmetry golden") {
    const auto j = runJson("ci-symmetry --n 5 --degs \"2,3\"");
    CHECK(j["full_support"] == true);
    CHECK(j["endpoint"] == "-1");
    CHECK(j["all_hold"] == true);
}

TEST_CASE("cli exit codes") {
    CHECK(run("qdepth --n 2 --ideal \"x1^\"").exit_code == 2);          // parse error
    CHECK(run("qdepth --n 2 --ideal \"x9\"").exit_code == 2);           // out of range
    CHECK(run("qdepth --n 2 --module pair --ideal \"x1\" --j-ideal \"x2\"").exit_code == 3);
    CHECK(run("qdepth --n 40 --ideal \"x1*x2\"").exit_code == 4);       // enumeration cap
    CHECK(run("qdepth --n 2").exit_code == 2);                          // missing ideal
    CHECK(run("no-such-command").exit_code == 2);
}
