#include "csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fr1d/errors.hpp"

namespace fr1d::cli {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, int line_no) {
  // strtod is exact for %.16e output, including subnormals, inf and nan.
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw DataError("csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s, int line_no) {
  const double v = parse_double(s, line_no);
  if (v != static_cast<int>(v)) {
    throw DataError("csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return static_cast<int>(v);
}

// Reads rows of exactly `columns` fields after checking the header.
std::vector<std::vector<std::string>> read_table(std::istream& is, const char* header,
                                                 std::size_t columns) {
  std::string line;
  if (!std::getline(is, line) || line != header) {
    throw DataError(std::string("csv header must be '") + header + "'");
  }
  std::vector<std::vector<std::string>> rows;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != columns) {
      throw DataError("csv line " + std::to_string(line_no) + ": expected " +
                      std::to_string(columns) + " fields");
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_error_csv(std::ostream& os, std::span<const ErrorSample> series) {
  os << kErrorHeader << '\n';
  for (const ErrorSample& s : series) {
    os << format_double(s.time) << ',' << format_double(s.l2_error) << ','
       << format_double(s.linf_error) << '\n';
  }
}

void write_diff_csv(std::ostream& os, std::span<const DiffSample> series) {
  os << kDiffHeader << '\n';
  for (const DiffSample& s : series) {
    os << format_double(s.time) << ',' << format_double(s.linf_diff) << '\n';
  }
}

void write_eoc_csv(std::ostream& os, std::span<const EocRow> rows) {
  os << kEocHeader << '\n';
  for (const EocRow& r : rows) {
    os << r.n_elem << ',' << format_double(r.l2_error) << ',' << format_double(r.order) << '\n';
  }
}

ErrorSeries read_error_csv(std::istream& is) {
  ErrorSeries out;
  int line_no = 1;
  for (const auto& f : read_table(is, kErrorHeader, 3)) {
    ++line_no;
    out.push_back({parse_double(f[0], line_no), parse_double(f[1], line_no),
                   parse_double(f[2], line_no)});
  }
  return out;
}

DiffSeries read_diff_csv(std::istream& is) {
  DiffSeries out;
  int line_no = 1;
  for (const auto& f : read_table(is, kDiffHeader, 2)) {
    ++line_no;
    out.push_back({parse_double(f[0], line_no), parse_double(f[1], line_no)});
  }
  return out;
}

std::vector<EocRow> read_eoc_csv(std::istream& is) {
  std::vector<EocRow> out;
  int line_no = 1;
  for (const auto& f : read_table(is, kEocHeader, 3)) {
    ++line_no;
    out.push_back({parse_int(f[0], line_no), parse_double(f[1], line_no),
                   parse_double(f[2], line_no)});
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DataError("cannot open '" + path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw DataError("failed writing '" + path + "'");
}

}  // namespace fr1d::cli
