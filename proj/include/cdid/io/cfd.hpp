#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cdid/field.hpp"

namespace cdid {

/// Largest accepted height or width of a stored field.
inline constexpr std::uint32_t kMaxFieldSide = 1u << 16;

/// Serialized complex field: "CDID1", u32 LE height, u32 LE width, u8 dtype
/// (0 = f64), then row-major (re, im) pairs as little-endian f64.
std::vector<std::uint8_t> encode_field(const ComplexField& field);

/// Inverse of encode_field. Throws cdid::Error with code bad_magic,
/// truncated_payload, unsupported_dtype, bad_dims or trailing_bytes.
ComplexField decode_field(std::span<const std::uint8_t> bytes);

ComplexField read_field(const std::filesystem::path& path);
void write_field(const ComplexField& field, const std::filesystem::path& path);

/// Whole file as bytes; throws cdid::Error("missing_file") when unreadable.
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(std::span<const std::uint8_t> bytes, const std::filesystem::path& path);

}  // namespace cdid
