#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <functional>
#include <sstream>

#include "cdid/io/cfd.hpp"
#include "cdid/io/csv.hpp"
#include "cdid/io/manifest.hpp"
#include "cdid/io/pgm.hpp"
#include "helpers.hpp"

using namespace cdid;
namespace fs = std::filesystem;

namespace {

std::string error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cdid_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("field files round trip bit-exactly") {
  Rng rng(16);
  ComplexField f = testutil::random_field(16, 16, rng);
  f[3] = {-0.0, 1e-310};
  const fs::path p = scratch("rt.cfd");
  write_field(f, p);
  const ComplexField g = read_field(p);
  REQUIRE(g.same_shape(f));
  CHECK(std::memcmp(g.data().data(), f.data().data(), f.size() * sizeof(cplx)) == 0);
  CHECK(fs::file_size(p) == 14 + 16 * 256);
}

TEST_CASE("header layout is little-endian") {
  ComplexField f(2, 3, cplx{1.0, -2.0});
  const auto b = encode_field(f);
  CHECK(std::string(b.begin(), b.begin() + 5) == "CDID1");
  CHECK(b[5] == 2);
  CHECK(b[6] == 0);
  CHECK(b[9] == 3);
  CHECK(b[13] == 0);
  // 1.0 = 0x3FF0000000000000 stored low byte first.
  CHECK(b[14 + 7] == 0x3F);
  CHECK(b[14 + 6] == 0xF0);
}

TEST_CASE("field decoding errors") {
  const auto good = encode_field(ComplexField(4, 4));
  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK(error_code([&] { decode_field(bad_magic); }) == "bad_magic");
  auto truncated = good;
  truncated.pop_back();
  CHECK(error_code([&] { decode_field(truncated); }) == "truncated_payload");
  CHECK(error_code([&] { decode_field(std::span(good).first(10)); }) == "truncated_payload");
  auto dtype = good;
  dtype[13] = 1;
  CHECK(error_code([&] { decode_field(dtype); }) == "unsupported_dtype");
  auto big = good;
  big[8] = 1;  // height = 2^24
  CHECK(error_code([&] { decode_field(big); }) == "bad_dims");
  auto trailing = good;
  trailing.push_back(0);
  CHECK(error_code([&] { decode_field(trailing); }) == "trailing_bytes");
  CHECK(error_code([] { read_field("/nonexistent/dir/x.cfd"); }) == "missing_file");
}

TEST_CASE("PGM reading") {
  const auto all_white = bytes_of("P5\n# comment line\n3 2\n255\n") ;
  auto img = all_white;
  img.insert(img.end(), 6, 255);
  const RealField f = parse_pgm(img, true);
  CHECK(f.height() == 2);
  CHECK(f.width() == 3);
  for (double v : f.data()) CHECK(v == 1.0);

  auto wide = bytes_of("P5 2 1 65535\n");
  wide.insert(wide.end(), {0x01, 0x00, 0xFF, 0xFF});
  const RealField w = parse_pgm(wide, false);
  CHECK(w[0] == 256.0);
  CHECK(w[1] == 65535.0);
  CHECK(parse_pgm(wide, true)[1] == 1.0);

  CHECK(error_code([] { parse_pgm(bytes_of("P6\n1 1\n255\n\x01\x02\x03"), true); }) == "color_image");
  CHECK(error_code([] { parse_pgm(bytes_of("P2\n1 1\n255\n7"), true); }) == "not_pgm");
  CHECK(error_code([] { parse_pgm(bytes_of("GIF89a"), true); }) == "not_pgm");
  CHECK(error_code([] { parse_pgm(bytes_of("P5\n4 4\n255\n\x01"), true); }) == "truncated_payload");
  CHECK(error_code([] { parse_pgm(bytes_of("P5\n4\n"), true); }) == "bad_header");
}

TEST_CASE("PGM write then read") {
  RealField f(3, 4);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(i) / 11.0;
  for (std::uint16_t maxval : {std::uint16_t{255}, std::uint16_t{65535}}) {
    const fs::path p = scratch("img.pgm");
    write_pgm(f, p, maxval);
    const RealField g = load_gray_image(p, true);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(g[i] - f[i]) <= 0.5 / maxval + 1e-15);
  }
}

TEST_CASE("CSV escaping round trip") {
  CsvTable t;
  t.header = {"a", "b,c", "d"};
  t.rows = {{"plain", "has \"quotes\"", "line\nbreak"}, {"", ",", "x"}};
  std::stringstream ss;
  write_csv(ss, t);
  CHECK(ss.str().starts_with("a,\"b,c\",d\r\n"));
  const CsvTable back = read_csv(ss);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK(back.column("d") == 2);
  CHECK(error_code([&] { back.column("zz"); }) == "missing_column");

  std::stringstream lf("x,y\n1,2\n3,4\n");
  CHECK(read_csv(lf).rows.size() == 2);
  std::stringstream ragged("x,y\n1\n");
  CHECK(error_code([&] { read_csv(ragged); }) == "bad_csv");
  std::stringstream open("x\n\"abc\n");
  CHECK(error_code([&] { read_csv(open); }) == "bad_csv");
}

TEST_CASE("number formatting round trips") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.normal() * std::pow(10.0, 20 * rng.uniform() - 10);
    REQUIRE(parse_number(format_number(v)) == v);
  }
  CHECK(format_number(kInfDb) == "inf");
  CHECK(std::isinf(parse_number("inf")));
  CHECK(error_code([] { parse_number("1.5x"); }) == "bad_number");
}

TEST_CASE("results table round trip") {
  MonteCarloRow r{"gauss", 0.1, "imre-it", 4, {}, 1.0};
  r.metrics = {55.5, 44.25, 0.01, 0.02, 33.0, kInfDb, 0.0};
  const CsvTable t = results_table({r}, "abc");
  CHECK(t.header.back() == "manifest");
  CHECK(t.rows[0].back() == "abc");
  const auto rows = rows_from_table(t);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].image == "gauss");
  CHECK(rows[0].run == 4);
  CHECK(rows[0].metrics.psnr_ampl == 44.25);
  CHECK(std::isinf(rows[0].metrics.snr_phi_abs));

  CsvTable partial = t;
  partial.header[4] = "other";
  CHECK(error_code([&] { rows_from_table(partial); }) == "missing_column");
}

TEST_CASE("manifest hashing") {
  CHECK(fnv1a_hex(std::string()) == "cbf29ce484222325");
  CHECK(fnv1a_hex(std::string("a")) == "af63dc4c8601ec8c");
  RunManifest m;
  m.command = "benchmark";
  m.seed = 5;
  const std::string h = m.hash();
  m.timing_seconds["total"] = 12.5;
  CHECK(m.hash() == h);
  m.seed = 6;
  CHECK(m.hash() != h);
  CHECK(m.to_json().at("manifest_hash") == m.hash());
}

}
