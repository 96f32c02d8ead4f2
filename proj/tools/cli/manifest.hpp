#pragma once

#include <string>

#include "json.hpp"

namespace expmde::cli {

/// {subcommand, parameters, seeds, version, timestamp}. Parameters carry
/// every resolved default so a run can be repeated from the manifest alone.
nlohmann::json make_manifest(const std::string& subcommand, nlohmann::json parameters,
                             nlohmann::json seeds = nlohmann::json::array());

/// Writes `<out>.manifest.json`.
void write_manifest(const std::string& out_path, const nlohmann::json& manifest);

/// Appends one record to `<out>.meta.jsonl` (truncated at the first record
/// of a run by passing fresh = true).
void append_metadata(const std::string& out_path, const nlohmann::json& record, bool fresh);

}  // namespace expmde::cli
