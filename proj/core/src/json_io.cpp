#include "qdepth/json_io.hpp"

#include <bit>

namespace qdepth {

namespace {

Json decimalArray(const std::vector<BigInt>& values) {
    Json arr = Json::array();
    for (const BigInt& v : values) {
        arr.push_back(to_decimal(v));
    }
    return arr;
}

Json varMapJson(const std::vector<VariableReplica>& varMap) {
    Json arr = Json::array();
    for (const VariableReplica& r : varMap) {
        Json row = Json::object();
        row["index"] = r.index;
        row["original"] = r.original;
        row["copy"] = r.copy;
        arr.push_back(std::move(row));
    }
    return arr;
}

Json generatorsJson(const MonomialIdeal& ideal) {
    Json arr = Json::array();
    for (const Monomial& g : ideal.generators()) {
        arr.push_back(g.text());
    }
    return arr;
}

} // namespace

std::vector<std::size_t> mask_to_indices(uint64_t mask) {
    std::vector<std::size_t> indices;
    indices.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::size_t b = 0; b < 64; ++b) {
        if (mask & (uint64_t(1) << b)) {
            indices.push_back(b + 1);
        }
    }
    return indices;
}

Json to_json(const AlphaVector& alpha) {
    Json j = Json::object();
    j["n"] = alpha.n;
    j["counts"] = decimalArray(alpha.counts);
    return j;
}

Json to_json(const BetaTable& table) {
    Json j = Json::object();
    j["d"] = table.d;
    j["entries"] = decimalArray(table.entries);
    j["nonnegative"] = table.nonnegative();
    return j;
}

Json to_json(const QDepthReport& report) {
    Json j = Json::object();
    j["value"] = report.value;
    j["n_effective"] = report.n_effective;
    j["n_added"] = report.n_added;
    j["witness"] = decimalArray(report.witness.entries);
    if (report.blocker) {
        Json b = Json::object();
        b["k"] = report.blocker->k;
        b["value"] = to_decimal(report.blocker->value);
        j["blocker"] = std::move(b);
    }
    return j;
}

Json to_json(const SDepthReport& report) {
    Json j = Json::object();
    j["value"] = report.value;
    j["n_effective"] = report.n_effective;
    j["n_added"] = report.n_added;
    Json intervals = Json::array();
    for (const Interval& iv : report.witness.intervals) {
        Json row = Json::object();
        row["lower"] = mask_to_indices(iv.lower);
        row["upper"] = mask_to_indices(iv.upper);
        intervals.push_back(std::move(row));
    }
    Json witness = Json::object();
    witness["n"] = report.witness.n;
    witness["intervals"] = std::move(intervals);
    j["witness"] = std::move(witness);
    return j;
}

Json to_json(const VeroneseReport& report) {
    Json j = Json::object();
    j["n"] = report.n;
    j["m"] = report.m;
    j["q"] = report.q;
    j["value"] = report.value;
    j["quotient_value"] = report.quotient_value;
    j["upper_bound"] = report.upper_bound;
    j["in_theorem_region"] = report.in_theorem_region;
    return j;
}

Json to_json(const ScanCell& cell) {
    Json j = Json::object();
    j["m"] = cell.m;
    j["q"] = cell.q;
    j["t"] = cell.t;
    j["n"] = cell.n;
    j["E"] = to_decimal(cell.E);
    j["holds"] = cell.holds;
    j["proof_status"] = cell.proof_status;
    return j;
}

Json to_json(const CISymmetryReport& report) {
    Json j = Json::object();
    j["n"] = report.n;
    j["m"] = report.m;
    j["degs"] = report.degs;
    j["full_support"] = report.full_support;
    j["endpoint"] = to_decimal(report.endpoint);
    Json checks = Json::array();
    for (const SymmetryCheck& check : report.checks) {
        Json c = Json::object();
        c["d"] = check.d;
        c["holds"] = check.holds;
        Json violations = Json::array();
        for (const SymmetryViolation& v : check.violations) {
            Json row = Json::object();
            row["k"] = v.k;
            row["sum"] = to_decimal(v.sum);
            violations.push_back(std::move(row));
        }
        c["violations"] = std::move(violations);
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["all_hold"] = report.all_hold;
    return j;
}

Json to_json(const PolarizationResult& result, std::size_t n_original) {
    Json j = Json::object();
    j["n_original"] = n_original;
    j["n_effective"] = result.ideal.nvars();
    j["added"] = result.added;
    j["generators"] = generatorsJson(result.ideal);
    j["var_map"] = varMapJson(result.var_map);
    return j;
}

Json to_json(const PolarizedPair& pair, std::size_t n_original) {
    Json j = Json::object();
    j["n_original"] = n_original;
    j["n_effective"] = pair.upper.nvars();
    j["added"] = pair.added;
    j["lower_generators"] = generatorsJson(pair.lower);
    j["upper_generators"] = generatorsJson(pair.upper);
    j["var_map"] = varMapJson(pair.var_map);
    return j;
}

std::string scan_csv_header() {
    return "m,q,t,n,E,holds,proof_status";
}

std::string scan_csv_row(const ScanCell& cell) {
    std::string row;
    row += std::to_string(cell.m);
    row += ',';
    row += std::to_string(cell.q);
    row += ',';
    row += std::to_string(cell.t);
    row += ',';
    row += std::to_string(cell.n);
    row += ',';
    row += to_decimal(cell.E);
    row += ',';
    row += cell.holds ? "true" : "false";
    row += ',';
    row += cell.proof_status;
    return row;
}

} // namespace qdepth
