#include "cdid/io/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "cdid/types.hpp"

namespace cdid {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error("missing_column", "CSV has no column '" + name + "'");
}

namespace {

void write_field(std::ostream& os, const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) {
    os << f;
    return;
  }
  os << '"';
  for (char c : f) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

void write_record(std::ostream& os, const std::vector<std::string>& rec) {
  for (std::size_t i = 0; i < rec.size(); ++i) {
    if (i) os << ',';
    write_field(os, rec[i]);
  }
  os << "\r\n";
}

}  // namespace

void write_csv(std::ostream& os, const CsvTable& table) {
  write_record(os, table.header);
  for (const auto& r : table.rows) {
    if (r.size() != table.header.size()) throw std::invalid_argument("CSV row width differs from header");
    write_record(os, r);
  }
}

CsvTable read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  auto end_field = [&] {
    rec.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(rec));
    rec.clear();
  };

  char c;
  while (is.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (is.peek() == '"') {
          is.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw Error("bad_csv", "quote inside an unquoted CSV field");
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (is.peek() == '\n') is.get(c);
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw Error("bad_csv", "unterminated quoted CSV field");
  if (field_started || !rec.empty()) end_record();

  if (records.empty()) throw Error("bad_csv", "CSV has no header row");
  CsvTable t;
  t.header = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != t.header.size()) {
      throw Error("bad_csv", "CSV record " + std::to_string(i) + " has " +
                                 std::to_string(records[i].size()) + " fields, header has " +
                                 std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(records[i]));
  }
  return t;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("missing_file", "cannot open '" + path.string() + "'");
  return read_csv(in);
}

void write_csv_file(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io", "cannot write '" + path.string() + "'");
  write_csv(out, table);
  if (!out) throw Error("io", "write to '" + path.string() + "' failed");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

double parse_number(const std::string& s) {
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw Error("bad_number", "'" + s + "' is not a number");
  }
  return v;
}

const std::vector<std::string>& result_columns() {
  static const std::vector<std::string> cols = {"image",  "sigma_phi",    "algorithm", "run",
                                                "psnr_phi", "psnr_ampl",  "rmse_phi_abs",
                                                "rmse_a", "snr_c",        "snr_phi_abs"};
  return cols;
}

CsvTable results_table(const std::vector<MonteCarloRow>& rows, const std::string& manifest_hash) {
  CsvTable t;
  t.header = result_columns();
  t.header.push_back("manifest");
  for (const auto& r : rows) {
    const auto& m = r.metrics;
    t.rows.push_back({r.image, format_number(r.sigma_phi), r.algorithm, std::to_string(r.run),
                      format_number(m.psnr_phi), format_number(m.psnr_ampl),
                      format_number(m.rmse_phi_abs), format_number(m.rmse_a),
                      format_number(m.snr_c), format_number(m.snr_phi_abs), manifest_hash});
  }
  return t;
}

std::vector<MonteCarloRow> rows_from_table(const CsvTable& table) {
  std::vector<std::size_t> idx;
  for (const auto& c : result_columns()) idx.push_back(table.column(c));
  std::vector<MonteCarloRow> rows;
  rows.reserve(table.rows.size());
  for (const auto& rec : table.rows) {
    MonteCarloRow r;
    r.image = rec[idx[0]];
    r.sigma_phi = parse_number(rec[idx[1]]);
    r.algorithm = rec[idx[2]];
    const double run = parse_number(rec[idx[3]]);
    if (!(run >= 0.0) || run != std::floor(run)) throw Error("bad_number", "run must be a non-negative integer");
    r.run = static_cast<std::size_t>(run);
    r.metrics.psnr_phi = parse_number(rec[idx[4]]);
    r.metrics.psnr_ampl = parse_number(rec[idx[5]]);
    r.metrics.rmse_phi_abs = parse_number(rec[idx[6]]);
    r.metrics.rmse_a = parse_number(rec[idx[7]]);
    r.metrics.snr_c = parse_number(rec[idx[8]]);
    r.metrics.snr_phi_abs = parse_number(rec[idx[9]]);
    rows.push_back(std::move(r));
  }
  return rows;
}

CsvTable boxplot_table(const BoxplotResult& box, const std::string& metric,
                       const std::string& manifest_hash) {
  CsvTable t;
  t.header = {"algorithm", "metric", "min", "q25", "median", "q75", "max", "count", "manifest"};
  for (const auto& s : box.stats) {
    t.rows.push_back({s.algorithm, metric, format_number(s.min), format_number(s.q25),
                      format_number(s.median), format_number(s.q75), format_number(s.max),
                      std::to_string(s.count), manifest_hash});
  }
  return t;
}

}  // namespace cdid
