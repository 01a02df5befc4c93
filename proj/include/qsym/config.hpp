#pragma once

#include <string>

#include <json.hpp>

#include "qsym/density.hpp"
#include "qsym/group.hpp"

namespace qsym {

using Json = nlohmann::ordered_json;

/// Parse a JSON experiment config from disk; ConfigError carries the
/// filename and parser position on failure.
Json load_json_file(const std::string& path);

/// Field accessors that name the offending field in their errors.
std::int64_t require_int(const Json& j, const std::string& field);
double require_real(const Json& j, const std::string& field);
std::vector<double> require_real_list(const Json& j, const std::string& field);
std::int64_t optional_int(const Json& j, const std::string& field,
                          std::int64_t fallback);
double optional_real(const Json& j, const std::string& field, double fallback);
bool optional_bool(const Json& j, const std::string& field, bool fallback);

/// group: {"kind": "cyclic", "d": ..., "charges": [...]} or
///        {"kind": "explicit", "mult_table": [[...]],
///         "unitaries": [[[re, im], ...] row-major, ...]}
GroupRep parse_group(const Json& config);

/// state: {"amplitudes": [[re, im], ...]} or
///        {"density": [[re, im], ...] row-major}
DensityOperator parse_state(const Json& config);

/// probs: [p_0, p_1, ...]
ProbabilityVector parse_probs(const Json& config);

}  // namespace qsym
