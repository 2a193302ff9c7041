#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace trendkit::csv {

// Minimal RFC-4180-style CSV: quoted fields may contain commas, doubled
// quotes and embedded newlines.

/// Reads one record. Returns false at end of input. `lines_consumed` is the
/// number of newline characters the record spanned (1 for a plain row).
bool read_record(std::istream& in, std::vector<std::string>& fields,
                 std::size_t& lines_consumed);

std::string escape(const std::string& field);
std::string join_row(const std::vector<std::string>& fields);

}  // namespace trendkit::csv
