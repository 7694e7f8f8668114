#include "qdepth/alpha.hpp"
#include "qdepth/ci.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/escan.hpp"
#include "qdepth/ideal.hpp"
#include "qdepth/json_io.hpp"
#include "qdepth/limits.hpp"
#include "qdepth/parse.hpp"
#include "qdepth/polarize.hpp"
#include "qdepth/qdepth.hpp"
#include "qdepth/random_instances.hpp"
#include "qdepth/sdepth.hpp"
#include "qdepth/veronese.hpp"

#include "selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qdepth;

// Exit codes: 0 ok, 1 selftest failures, 2 parse, 3 domain, 4 resource cap,
// 70 internal error.
constexpr int kExitSelftest = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCap = 4;
constexpr int kExitInternal = 70;

Limits limitsFromEnv() {
    Limits limits;
    if (const char* env = std::getenv("QDEPTH_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 ||
            v > static_cast<long>(kMaxPosetVars)) {
            throw DomainError("QDEPTH_MAX_N must be an integer in [1, 62]");
        }
        limits.enum_cap = static_cast<std::size_t>(v);
    }
    return limits;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// One ideal input: inline text or a file, never both (CLI11 enforces).
struct IdealInput {
    std::optional<std::string> text;
    std::string file;

    bool provided() const { return text.has_value() || !file.empty(); }

    MonomialIdeal load(std::size_t n) const {
        if (text.has_value()) {
            return parse_ideal(*text, n);
        }
        return parse_ideal(readFile(file), n);
    }
};

void addIdealOptions(CLI::App* cmd, IdealInput& input, const std::string& name,
                     bool required) {
    auto* group = cmd->add_option_group(name);
    group->add_option("--" + name, input.text, "ideal as text, e.g. \"x1^2, x1*x2^2\"");
    group->add_option("--" + name + "-file", input.file, "file holding the ideal text")
        ->check(CLI::ExistingFile);
    if (required) {
        group->require_option(1);
    } else {
        group->require_option(0, 1);
    }
}

// Resolves --module into the pair (J, I) with the module J/I.
struct ModuleRequest {
    std::size_t n = 0;
    std::string module = "quotient";
    IdealInput ideal;  // I (quotient/pair) or the ideal itself (ideal mode)
    IdealInput jIdeal; // J, pair mode only

    std::pair<MonomialIdeal, MonomialIdeal> resolve() const { // (J, I)
        const MonomialIdeal primary = ideal.load(n);
        if (module == "quotient") {
            return {MonomialIdeal::unit(n), primary};
        }
        if (module == "ideal") {
            return {primary, MonomialIdeal::zero(n)};
        }
        if (!jIdeal.provided()) {
            throw DomainError("--module pair needs --j-ideal or --j-ideal-file");
        }
        return {jIdeal.load(n), primary};
    }
};

void addModuleOptions(CLI::App* cmd, ModuleRequest& request) {
    cmd->add_option("--n", request.n, "number of variables")->required()->check(CLI::PositiveNumber);
    addIdealOptions(cmd, request.ideal, "ideal", true);
    cmd->add_option("--module", request.module, "which module: S/I, the ideal I, or a pair J/I")
        ->check(CLI::IsMember({"quotient", "ideal", "pair"}))
        ->capture_default_str();
    addIdealOptions(cmd, request.jIdeal, "j-ideal", false);
}

void printJson(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<BigInt> parseDecimalList(const std::string& text) {
    std::vector<BigInt> values;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t begin = item.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            throw DomainError("empty entry in list: \"" + text + "\"");
        }
        std::size_t end = item.find_last_not_of(" \t");
        values.push_back(bigint_from_decimal(item.substr(begin, end - begin + 1)));
    }
    if (values.empty()) {
        throw DomainError("empty list: \"" + text + "\"");
    }
    return values;
}

std::vector<uint32_t> parseDegreeList(const std::string& text) {
    std::vector<uint32_t> degs;
    for (const BigInt& v : parseDecimalList(text)) {
        if (v < 1 || v > 1000000) {
            throw DomainError("degrees must be integers in [1, 10^6]");
        }
        degs.push_back(static_cast<uint32_t>(v));
    }
    return degs;
}

int runApp(int argc, char** argv) {
    CLI::App app{"exact quasi depth of quotients of monomial ideals"};
    app.require_subcommand(1);

    // qdepth
    ModuleRequest qdepthReq;
    auto* cmdQdepth = app.add_subcommand("qdepth", "quasi depth of S/I, I, or J/I");
    addModuleOptions(cmdQdepth, qdepthReq);

    // sdepth
    ModuleRequest sdepthReq;
    std::size_t sdepthMaxN = Limits{}.sdepth_cap;
    auto* cmdSdepth =
        app.add_subcommand("sdepth", "Stanley depth by exhaustive search (small inputs)");
    addModuleOptions(cmdSdepth, sdepthReq);
    cmdSdepth
        ->add_option("--max-n", sdepthMaxN,
                     "ambient-size cap for the search (worst-case exponential)")
        ->capture_default_str();

    // alpha
    ModuleRequest alphaReq;
    std::string alphaMethod = "enum";
    auto* cmdAlpha = app.add_subcommand("alpha", "alpha vector of the characteristic poset");
    addModuleOptions(cmdAlpha, alphaReq);
    cmdAlpha
        ->add_option("--method", alphaMethod,
                     "enum: walk all subsets; ie: inclusion-exclusion over generators")
        ->check(CLI::IsMember({"enum", "ie"}))
        ->capture_default_str();

    // beta
    std::string betaAlphaText;
    std::size_t betaD = 0;
    auto* cmdBeta = app.add_subcommand("beta", "beta table of an alpha vector at level d");
    cmdBeta->add_option("--alpha", betaAlphaText, "comma-separated counts, e.g. \"1,4,5,1\"")
        ->required();
    cmdBeta->add_option("--d", betaD, "table level")->required();

    // polarize
    std::size_t polN = 0;
    IdealInput polIdeal;
    IdealInput polJIdeal;
    auto* cmdPolarize = app.add_subcommand("polarize", "squarefree polarization of an ideal or pair");
    cmdPolarize->add_option("--n", polN, "number of variables")->required()->check(CLI::PositiveNumber);
    addIdealOptions(cmdPolarize, polIdeal, "ideal", true);
    addIdealOptions(cmdPolarize, polJIdeal, "j-ideal", false);

    // veronese
    std::size_t verN = 0;
    std::size_t verM = 0;
    auto* cmdVeronese =
        app.add_subcommand("veronese", "quasi depth of the squarefree Veronese ideal");
    cmdVeronese->add_option("--n", verN, "number of variables")->required()->check(CLI::PositiveNumber);
    cmdVeronese->add_option("--m", verM, "generator degree")->required()->check(CLI::PositiveNumber);

    // scan-E
    long long scanMMax = 6;
    long long scanQMax = 12;
    std::string scanFormat = "csv";
    auto* cmdScanE = app.add_subcommand("scan-E", "positivity scan of E(m,q,t,n) at n = mq+m+q");
    cmdScanE->add_option("--m-max", scanMMax, "largest m")->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmdScanE->add_option("--q-max", scanQMax, "largest q")->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmdScanE->add_option("--format", scanFormat, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();

    // ci-symmetry
    std::size_t ciN = 0;
    std::string ciDegsText;
    std::optional<std::size_t> ciD;
    bool ciScan = false;
    std::size_t ciNMax = 10;
    std::size_t ciMMax = 4;
    std::size_t ciSamples = 3;
    uint64_t ciSeed = 42;
    auto* cmdCi = app.add_subcommand(
        "ci-symmetry", "beta antisymmetry report for complete-intersection quotients");
    auto* optCiN = cmdCi->add_option("--n", ciN, "number of variables")->check(CLI::PositiveNumber);
    auto* optCiDegs =
        cmdCi->add_option("--degs", ciDegsText, "generator degrees, e.g. \"1,2,2\"");
    cmdCi->add_option("--d", ciD, "test only this beta level");
    auto* optCiScan = cmdCi->add_flag("--scan", ciScan, "scan random degree splits instead");
    cmdCi->add_option("--n-max", ciNMax, "scan: largest n")->capture_default_str();
    cmdCi->add_option("--m-max", ciMMax, "scan: largest generator count")->capture_default_str();
    cmdCi->add_option("--samples", ciSamples, "scan: degree splits per (n, m)")
        ->capture_default_str();
    cmdCi->add_option("--seed", ciSeed, "scan: RNG seed")->capture_default_str();
    optCiScan->excludes(optCiN);
    optCiScan->excludes(optCiDegs);

    // selftest
    uint64_t selftestSeed = 20240614;
    std::size_t selftestSamples = 20;
    auto* cmdSelftest =
        app.add_subcommand("selftest", "golden examples and randomized property suites");
    cmdSelftest->add_option("--seed", selftestSeed, "RNG seed")->capture_default_str();
    cmdSelftest->add_option("--samples", selftestSamples, "instances per property suite")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help and friends
        }
        app.exit(e);
        return kExitParse;
    }

    const Limits limits = limitsFromEnv();

    if (cmdQdepth->parsed()) {
        const auto [J, I] = qdepthReq.resolve();
        printJson(to_json(qdepth::qdepth(J, I, limits)));
        return 0;
    }

    if (cmdSdepth->parsed()) {
        Limits searchLimits = limits;
        searchLimits.sdepth_cap = sdepthMaxN;
        const auto [J, I] = sdepthReq.resolve();
        printJson(to_json(sdepth(J, I, searchLimits)));
        return 0;
    }

    if (cmdAlpha->parsed()) {
        const auto [J, I] = alphaReq.resolve();
        const PolarizedPair pair = polarize_pair(I, J);
        AlphaVector alpha;
        if (alphaMethod == "enum") {
            alpha = alpha_vector(build_poset(pair.upper, pair.lower, limits));
        } else {
            alpha = alpha_quotient_pair(pair.upper, pair.lower, limits);
        }
        Json j = Json::object();
        j["n_effective"] = alpha.n;
        j["n_added"] = pair.added;
        j["counts"] = to_json(alpha)["counts"];
        printJson(j);
        return 0;
    }

    if (cmdBeta->parsed()) {
        AlphaVector alpha;
        alpha.counts = parseDecimalList(betaAlphaText);
        alpha.n = alpha.counts.size() - 1;
        for (const BigInt& c : alpha.counts) {
            if (c < 0) {
                throw DomainError("alpha entries must be nonnegative");
            }
        }
        printJson(to_json(beta_table(alpha, betaD)));
        return 0;
    }

    if (cmdPolarize->parsed()) {
        const MonomialIdeal ideal = polIdeal.load(polN);
        if (polJIdeal.provided()) {
            printJson(to_json(polarize_pair(ideal, polJIdeal.load(polN)), polN));
        } else {
            printJson(to_json(polarize(ideal), polN));
        }
        return 0;
    }

    if (cmdVeronese->parsed()) {
        printJson(to_json(qdepth_veronese(verN, verM)));
        return 0;
    }

    if (cmdScanE->parsed()) {
        if (scanFormat == "csv") {
            std::cout << scan_csv_header() << "\n";
            conjecture_scan(scanMMax, scanQMax,
                            [](const ScanCell& cell) { std::cout << scan_csv_row(cell) << "\n"; });
        } else {
            conjecture_scan(scanMMax, scanQMax,
                            [](const ScanCell& cell) { std::cout << to_json(cell).dump() << "\n"; });
        }
        return 0;
    }

    if (cmdCi->parsed()) {
        if (ciScan) {
            Rng rng(ciSeed);
            for (std::size_t n = 2; n <= ciNMax; ++n) {
                for (std::size_t m = 1; m <= std::min(ciMMax, n); ++m) {
                    for (std::size_t s = 0; s < ciSamples; ++s) {
                        const auto degs = random_full_support_degrees(rng, n, m);
                        std::cout << to_json(ci_symmetry(n, degs, ciD)).dump() << "\n";
                    }
                }
            }
        } else {
            if (ciN == 0 || ciDegsText.empty()) {
                throw DomainError("ci-symmetry needs --n and --degs (or --scan)");
            }
            printJson(to_json(ci_symmetry(ciN, parseDegreeList(ciDegsText), ciD)));
        }
        return 0;
    }

    if (cmdSelftest->parsed()) {
        const int failures = selftest::run(selftestSeed, selftestSamples, limits);
        return failures == 0 ? 0 : kExitSelftest;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return runApp(argc, argv);
    } catch (const qdepth::ParseError& e) {
        std::cerr << "parse error at byte " << e.offset() << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const qdepth::CapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const qdepth::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInternal;
    }
}
