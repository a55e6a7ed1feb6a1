#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdid/sim/boxplot.hpp"
#include "cdid/sim/montecarlo.hpp"

namespace cdid {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column, or throws cdid::Error("missing_column").
  std::size_t column(const std::string& name) const;
};

/// RFC 4180: fields containing a comma, quote, CR or LF are quoted, quotes
/// doubled, records end with CRLF.
void write_csv(std::ostream& os, const CsvTable& table);
/// Accepts CRLF or LF record ends. The first record is the header.
CsvTable read_csv(std::istream& is);

CsvTable read_csv_file(const std::filesystem::path& path);
void write_csv_file(const std::filesystem::path& path, const CsvTable& table);

/// Shortest text that parses back to the same double; "inf", "-inf", "nan".
std::string format_number(double v);
double parse_number(const std::string& s);

/// Per-run metric columns, in order.
const std::vector<std::string>& result_columns();

/// One row per Monte-Carlo cell, each tagged with the manifest hash.
CsvTable results_table(const std::vector<MonteCarloRow>& rows, const std::string& manifest_hash);

/// Rows of a results table produced elsewhere. Needs the image, sigma_phi,
/// algorithm and run columns plus the six metric columns.
std::vector<MonteCarloRow> rows_from_table(const CsvTable& table);

/// algorithm, metric, min, q25, median, q75, max, count (+ manifest).
CsvTable boxplot_table(const BoxplotResult& box, const std::string& metric,
                       const std::string& manifest_hash);

}  // namespace cdid
