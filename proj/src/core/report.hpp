#pragma once

// Report rows and their JSON-lines / CSV encodings.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core/correlation.hpp"
#include "core/oracle.hpp"
#include "core/ppoly.hpp"

namespace srs {

struct McRow {
  int k = 0;
  std::int64_t N = 0;
  std::int64_t n = 0;
  McEstimate estimate;
};

struct PPolyRow {
  int k = 0;
  int m = 0;
  Poly poly;
};

struct VerifyRow {
  std::string identity;
  std::string range;
  bool pass = false;
  std::uint64_t checked = 0;
  std::string detail;
};

using ReportRow = std::variant<CorrRecord, LimitSpec, McRow, PPolyRow, VerifyRow>;

enum class RowKind { Corr = 0, Limit = 1, Mc = 2, PPoly = 3, Verify = 4 };
enum class Format { Json, Csv };

Format parse_format(std::string_view name);
RowKind kind_of(const ReportRow& row);
std::vector<std::string> csv_columns(RowKind kind);

/// JSON: one object per line. CSV: header then one line per row; all rows must
/// share a kind, and `empty_kind` picks the header when there are none.
/// `precision` (>= 1) is the number of fractional digits in *_decimal fields.
std::string emit_report(std::span<const ReportRow> rows, Format format, int precision,
                        RowKind empty_kind = RowKind::Corr);

/// Inverse of emit_report for both formats; decimal fields are ignored and the
/// exact fields are restored.
std::vector<ReportRow> parse_report(std::string_view text, Format format);

/// RFC 4180 field splitting of a CSV document into records.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace srs
