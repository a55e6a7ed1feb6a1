#include "cdid/io/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "cdid/io/cfd.hpp"
#include "cdid/types.hpp"

namespace cdid {

std::string fnv1a_hex(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fnv1a_hex(const std::string& text) {
  return fnv1a_hex(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string hash_file(const std::filesystem::path& path) { return fnv1a_hex(read_bytes(path)); }

namespace {

nlohmann::json hashed_part(const RunManifest& m) {
  return {{"command", m.command},   {"config", m.config},        {"seed", m.seed},
          {"version", m.version},   {"input_hashes", m.input_hashes}};
}

}  // namespace

std::string RunManifest::hash() const { return fnv1a_hex(hashed_part(*this).dump()); }

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j = hashed_part(*this);
  j["timing_seconds"] = timing_seconds;
  j["manifest_hash"] = hash();
  return j;
}

void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("io", "cannot write '" + path.string() + "'");
  out << m.to_json().dump(2) << '\n';
}

}  // namespace cdid
