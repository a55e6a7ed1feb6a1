#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

#include "cdid/field.hpp"

namespace cdid {

/// Binary grayscale PGM (P5), 8 or 16 bit. With `normalize` the samples are
/// divided by maxval, otherwise raw gray levels are returned.
/// Throws cdid::Error: not_pgm, color_image, bad_header, truncated_payload.
RealField parse_pgm(std::span<const std::uint8_t> bytes, bool normalize);
RealField load_gray_image(const std::filesystem::path& path, bool normalize);

/// Writes values clamped to [0, 1] and scaled to maxval (255 or 65535).
void write_pgm(const RealField& image, const std::filesystem::path& path,
               std::uint16_t maxval = 255);

}  // namespace cdid
