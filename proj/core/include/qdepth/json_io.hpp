#pragma once

#include "qdepth/alpha.hpp"
#include "qdepth/beta.hpp"
#include "qdepth/ci.hpp"
#include "qdepth/escan.hpp"
#include "qdepth/polarize.hpp"
#include "qdepth/qdepth.hpp"
#include "qdepth/sdepth.hpp"
#include "qdepth/veronese.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qdepth {

// Insertion-ordered so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// All big integers render as exact decimal strings, never as JSON numbers.
Json to_json(const AlphaVector& alpha);
Json to_json(const BetaTable& table);
Json to_json(const QDepthReport& report);
Json to_json(const SDepthReport& report);
Json to_json(const VeroneseReport& report);
Json to_json(const ScanCell& cell);
Json to_json(const CISymmetryReport& report);

// Polarization output keeps the original ambient size alongside the result.
Json to_json(const PolarizationResult& result, std::size_t n_original);
Json to_json(const PolarizedPair& pair, std::size_t n_original);

// Bitmask as a sorted list of 1-based variable indices.
std::vector<std::size_t> mask_to_indices(uint64_t mask);

// CSV face of the positivity scan.
std::string scan_csv_header(); // m,q,t,n,E,holds,proof_status
std::string scan_csv_row(const ScanCell& cell);

} // namespace qdepth
