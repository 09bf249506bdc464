#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "core/fatpoints.hpp"
#include "core/hhs.hpp"
#include "core/hilbert.hpp"
#include "core/oracle.hpp"

namespace cipow {

using Json = nlohmann::ordered_json;

// Schema violation: message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers are JSON numbers when they fit in int64 and decimal strings
// otherwise; decoders accept both. Rationals are always strings "p/q"/"p".
Json encode_integer(const BigInt& v);
BigInt decode_integer(const Json& j, const std::string& where);

Json betti_to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);

Json hilbert_to_json(const HilbertData& data);
HilbertData hilbert_from_json(const Json& j);
std::string hilbert_to_csv(const HilbertData& data);

Json hhs_to_json(const CIType& type, int s, const HHSReport& report);
std::string hhs_summary(const HHSReport& report);

Json invariant_report_to_json(const InvariantReport& report);
Json sandwich_to_json(const CIType& type, const std::vector<int>& mults,
                      const SandwichReport& report);

Json points_to_json(const PointConfig& config);
PointConfig points_from_json(const Json& j);

// Grid spec: {"lists": [["0","1"], ...]} or {"sizes": [3,4]} plus either
// "mult" (uniform) or "mults" (one per point).
PointConfig grid_from_json(const Json& j);

// Parse text, mapping nlohmann errors to ParseError.
Json parse_json_text(const std::string& text);

// 2-space indented dump with a trailing newline.
std::string pretty(const Json& j);

}  // namespace cipow
