#include "cdid/io/cfd.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace cdid {

namespace {

constexpr std::array<char, 5> kMagic = {'C', 'D', 'I', 'D', '1'};
constexpr std::size_t kHeaderSize = kMagic.size() + 4 + 4 + 1;
constexpr std::uint8_t kDtypeF64 = 0;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

double get_f64(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = bits << 8 | p[i];
  return std::bit_cast<double>(bits);
}

void check_dims(std::uint64_t h, std::uint64_t w) {
  if (h == 0 || w == 0 || h > kMaxFieldSide || w > kMaxFieldSide) {
    throw Error("bad_dims", "field dimensions " + std::to_string(h) + "x" + std::to_string(w) +
                                " outside [1, " + std::to_string(kMaxFieldSide) + "]");
  }
}

}  // namespace

std::vector<std::uint8_t> encode_field(const ComplexField& field) {
  check_dims(field.height(), field.width());
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + 16 * field.size());
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  put_u32(out, static_cast<std::uint32_t>(field.height()));
  put_u32(out, static_cast<std::uint32_t>(field.width()));
  out.push_back(kDtypeF64);
  for (const auto& v : field.data()) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

ComplexField decode_field(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() ||
      !std::equal(kMagic.begin(), kMagic.end(), bytes.begin(),
                  [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
    throw Error("bad_magic", "not a CDID1 field file");
  }
  if (bytes.size() < kHeaderSize) throw Error("truncated_payload", "field header is incomplete");
  const std::uint32_t h = get_u32(bytes.data() + 5);
  const std::uint32_t w = get_u32(bytes.data() + 9);
  const std::uint8_t dtype = bytes[13];
  if (dtype != kDtypeF64) {
    throw Error("unsupported_dtype", "dtype tag " + std::to_string(dtype) + " is not supported");
  }
  check_dims(h, w);
  const std::size_t n = static_cast<std::size_t>(h) * w;
  const std::size_t expected = kHeaderSize + 16 * n;
  if (bytes.size() < expected) {
    throw Error("truncated_payload", "payload has " + std::to_string(bytes.size() - kHeaderSize) +
                                         " bytes, expected " + std::to_string(16 * n));
  }
  if (bytes.size() > expected) throw Error("trailing_bytes", "unexpected data after payload");

  ComplexField out(h, w);
  const std::uint8_t* p = bytes.data() + kHeaderSize;
  for (std::size_t i = 0; i < n; ++i, p += 16) out[i] = {get_f64(p), get_f64(p + 8)};
  return out;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("missing_file", "cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(std::span<const std::uint8_t> bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io", "cannot write '" + path.string() + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("io", "write to '" + path.string() + "' failed");
}

ComplexField read_field(const std::filesystem::path& path) { return decode_field(read_bytes(path)); }

void write_field(const ComplexField& field, const std::filesystem::path& path) {
  write_bytes(encode_field(field), path);
}

}  // namespace cdid
