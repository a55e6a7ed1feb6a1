#include "cdid/io/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "cdid/io/cfd.hpp"

namespace cdid {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> b) : b_(b) {}

  // Skips whitespace and '#' comments, then reads one decimal token.
  std::uint64_t number() {
    for (;;) {
      if (pos_ >= b_.size()) throw Error("bad_header", "PGM header ends early");
      if (b_[pos_] == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (std::isspace(b_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < b_.size() && std::isdigit(b_[pos_])) {
      v = v * 10 + (b_[pos_++] - '0');
      if (++digits > 9) throw Error("bad_header", "PGM header value too large");
    }
    if (digits == 0) throw Error("bad_header", "malformed PGM header");
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_start() {
    if (pos_ >= b_.size() || !std::isspace(b_[pos_])) {
      throw Error("bad_header", "missing separator before PGM raster");
    }
    return pos_ + 1;
  }

 private:
  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 2;
};

}  // namespace

RealField parse_pgm(std::span<const std::uint8_t> bytes, bool normalize) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw Error("not_pgm", "not a netpbm file");
  if (bytes[1] == '6' || bytes[1] == '3') throw Error("color_image", "color PPM input is not supported");
  if (bytes[1] != '5') throw Error("not_pgm", "only binary PGM (P5) is supported");

  HeaderReader hdr(bytes);
  const auto width = hdr.number();
  const auto height = hdr.number();
  const auto maxval = hdr.number();
  if (width == 0 || height == 0 || width > kMaxFieldSide || height > kMaxFieldSide) {
    throw Error("bad_header", "PGM dimensions out of range");
  }
  if (maxval == 0 || maxval > 65535) throw Error("bad_header", "PGM maxval out of range");
  const std::size_t start = hdr.raster_start();
  const std::size_t bps = maxval > 255 ? 2 : 1;
  const std::size_t n = width * height;
  if (bytes.size() - start < n * bps) throw Error("truncated_payload", "PGM raster is incomplete");

  RealField out(height, width);
  const double scale = normalize ? 1.0 / static_cast<double>(maxval) : 1.0;
  const std::uint8_t* p = bytes.data() + start;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned v = bps == 2 ? (unsigned{p[2 * i]} << 8 | p[2 * i + 1]) : p[i];
    out[i] = static_cast<double>(v) * scale;
  }
  return out;
}

RealField load_gray_image(const std::filesystem::path& path, bool normalize) {
  return parse_pgm(read_bytes(path), normalize);
}

void write_pgm(const RealField& image, const std::filesystem::path& path, std::uint16_t maxval) {
  if (maxval != 255 && maxval != 65535) throw std::invalid_argument("write_pgm: maxval must be 255 or 65535");
  const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n" + std::to_string(maxval) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (double v : image.data()) {
    const auto q = static_cast<unsigned>(std::lround(std::clamp(v, 0.0, 1.0) * maxval));
    if (maxval > 255) out.push_back(static_cast<std::uint8_t>(q >> 8));
    out.push_back(static_cast<std::uint8_t>(q & 0xff));
  }
  write_bytes(out, path);
}

}  // namespace cdid
