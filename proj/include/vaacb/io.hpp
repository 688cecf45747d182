#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "vaacb/moea.hpp"
#include "vaacb/objectives.hpp"
#include "vaacb/scenario.hpp"

namespace vaacb {

using Json = nlohmann::ordered_json;

/// Invalid or unreadable input. what() names the offending field path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json scenario_to_json(const Scenario& scenario);
/// Rejects unknown fields and missing required fields, then validates.
Scenario scenario_from_json(const Json& j);

Json config_to_json(const AlgoConfig& config);
/// Missing fields keep their defaults; unknown fields are rejected.
AlgoConfig config_from_json(const Json& j, AlgoConfig base = {});

Json genome_to_json(const Genome& genome);
Genome genome_from_json(const Json& j);

Json objectives_to_json(const ObjectiveVector& v);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Canonical text: two-space indent, fields in declaration order.
std::string dump_canonical(const Json& j);

/// 17-significant-digit rendering for CSV output.
std::string format_double(double v);

/// FNV-1a 64-bit digest of the canonical scenario text, as 16 hex digits.
std::string scenario_digest(const Scenario& scenario);

}  // namespace vaacb
