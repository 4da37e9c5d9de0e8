#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "sendov/asymptotic.hpp"
#include "sendov/report.hpp"
#include "sendov/search.hpp"

namespace sendov::io {

// JSON input schema (complex numbers are always [re, im] pairs):
//
//   factored configuration
//     {"a": [re, im], "n": int,
//      "zeros": [{"z": [re, im], "mult": int}, ...],
//      "unit_disk": bool (optional, default true)}
//
//   asymptotic family
//     {"a": [re, im],
//      "zeros": [{"z": [re, im], "r": int, "s": <rule>}, ...]}
//     <rule> one of
//       {"kind": "const", "c": int}
//       {"kind": "mod", "c": int, "d": int}        // (c*n) mod d
//       {"kind": "log", "c": number}               // floor(c * ln n)
//       {"kind": "table", "entries": [[n, value], ...]}  // 0 outside
//
//   search space
//     {"k": int, "n": int, "multiplicities": [int, ...],
//      "a_mode": "fixed" | "free", "a": number (fixed mode),
//      "seed": int (optional)}

Complex parse_complex(const nlohmann::json& v);
FactoredPolynomial parse_factored(const nlohmann::json& j);
AsymptoticConfig parse_asymptotic(const nlohmann::json& j);
SearchSpace parse_space(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

// Resolved-configuration blocks embedded in every report so a run is
// reproducible from its own output.
report::Value factored_value(const FactoredPolynomial& fp);
report::Value asymptotic_value(const AsymptoticConfig& cfg);
report::Value space_value(const SearchSpace& space);

}  // namespace sendov::io
