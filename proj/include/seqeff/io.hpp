#pragma once

// JSON documents for elements, decompositions, function models, suite
// configurations and audit reports. Doubles are written losslessly.

#include <string>

#include "json.hpp"
#include "seqeff/algebra.hpp"
#include "seqeff/auditor.hpp"
#include "seqeff/commutant.hpp"
#include "seqeff/spectral.hpp"

namespace seqeff::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// real:n | complex:n | quat:n | spin:d | sum(<a>,<b>,...)
AlgebraDescriptor parse_algebra(const std::string& shorthand);

json algebra_to_json(const AlgebraDescriptor& alg);
AlgebraDescriptor algebra_from_json(const json& j);

json element_to_json(const Element& e);
Element element_from_json(const json& j);

json decomposition_to_json(const SpectralDecomposition& sd);
SpectralDecomposition decomposition_from_json(const json& j);

json function_model_to_json(const FunctionModel& m);
FunctionModel function_model_from_json(const json& j);

json row_to_json(const AuditRow& row);
AuditRow row_from_json(const json& j, std::uint64_t default_seed);

json config_to_json(const SuiteConfig& config);
// Throws ConfigError naming the offending row index.
SuiteConfig config_from_json(const json& j);

json report_to_json(const AuditReport& report, bool include_elapsed = true);
AuditReport report_from_json(const json& j);

// Reads and parses a JSON file; ConfigError on I/O or syntax errors.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace seqeff::io
