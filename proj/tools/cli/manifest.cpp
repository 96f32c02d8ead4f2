#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "mmio.hpp"

#ifndef EXPMDE_VERSION
#define EXPMDE_VERSION "unknown"
#endif

namespace expmde::cli {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::ofstream open_or_throw(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

}  // namespace

nlohmann::json make_manifest(const std::string& subcommand, nlohmann::json parameters, nlohmann::json seeds) {
  return {{"subcommand", subcommand},
          {"parameters", std::move(parameters)},
          {"seeds", std::move(seeds)},
          {"version", EXPMDE_VERSION},
          {"timestamp", utc_timestamp()}};
}

void write_manifest(const std::string& out_path, const nlohmann::json& manifest) {
  auto out = open_or_throw(out_path + ".manifest.json", std::ios::out | std::ios::trunc);
  out << manifest.dump(2) << '\n';
}

void append_metadata(const std::string& out_path, const nlohmann::json& record, bool fresh) {
  auto out = open_or_throw(out_path + ".meta.jsonl", fresh ? std::ios::out | std::ios::trunc : std::ios::app);
  out << record.dump() << '\n';
}

}  // namespace expmde::cli
