#pragma once

// File formats (JSON) and serialization. State indices are 1-based on disk,
// matching the usual labeling of model states; they are 0-based in memory.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ics/cumulants.hpp"
#include "ics/hypothesis.hpp"
#include "ics/model.hpp"
#include "ics/poly_inverse.hpp"
#include "ics/recovery.hpp"
#include "ics/trajectory.hpp"

namespace ics {

using Json = nlohmann::json;

Json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& value);

ModelSpec model_from_json(const Json& j);
Json model_to_json(const ModelSpec& spec);

// {"time_base": t, "cumulants": [...], "stderr": [...] (optional)}
CumulantVector cumulants_from_json(const Json& j);
Json cumulants_to_json(const CumulantVector& cumulants, double time_base = 1.0);

EventTrace trace_from_json(const Json& j);
Json trace_to_json(const EventTrace& trace);

// {"model": {...}, "unknowns": [{"kind": "rate", "from": j, "to": i} |
//                               {"kind": "coupling", "i": i, "j": j}]}
ParameterStructure structure_from_json(const Json& j);
Json structure_to_json(const ParameterStructure& structure);

Json pair_to_json(const CharPolyPair& pair);
CharPolyPair pair_from_json(const Json& j);
Json reconstruction_to_json(const Reconstruction& recon);
Json verdict_to_json(const Verdict& verdict);
Json dimension_scan_to_json(const DimensionScan& scan);
Json report_to_json(const RecoveryReport& report);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string model_hash(const ModelSpec& spec);
std::string file_hash(const std::filesystem::path& path);

} // namespace ics
