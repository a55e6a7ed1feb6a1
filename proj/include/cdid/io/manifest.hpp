#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>

#include <json.hpp>

namespace cdid {

inline constexpr const char* kToolVersion = "1.0.0";

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::span<const std::uint8_t> bytes);
std::string fnv1a_hex(const std::string& text);
std::string hash_file(const std::filesystem::path& path);

/// Provenance record written next to every CSV output.
struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::map<std::string, std::string> input_hashes;  // path -> fnv1a
  std::map<std::string, double> timing_seconds;     // stage -> wall time

  /// Hash of everything except timing, so reruns with the same inputs agree.
  std::string hash() const;
  nlohmann::json to_json() const;
};

/// Writes the manifest (with its hash) as pretty JSON.
void write_manifest(const RunManifest& m, const std::filesystem::path& path);

}  // namespace cdid
