#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fr1d/driver.hpp"

namespace fr1d::cli {

inline constexpr const char* kErrorHeader = "time,l2_error,linf_error";
inline constexpr const char* kDiffHeader = "time,linf_diff";
inline constexpr const char* kEocHeader = "n_elem,l2_error,order";

/// Doubles are written as %.16e, which round-trips exactly.
std::string format_double(double v);

void write_error_csv(std::ostream& os, std::span<const ErrorSample> series);
void write_diff_csv(std::ostream& os, std::span<const DiffSample> series);
void write_eoc_csv(std::ostream& os, std::span<const EocRow> rows);

/// Throw DataError on a wrong header or a malformed row.
ErrorSeries read_error_csv(std::istream& is);
DiffSeries read_diff_csv(std::istream& is);
std::vector<EocRow> read_eoc_csv(std::istream& is);

/// Writes `content` to `path`; throws DataError if the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fr1d::cli
