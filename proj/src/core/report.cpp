#include "core/report.hpp"

#include <charconv>
#include <functional>
#include <optional>

#include "json.hpp"

namespace srs {

using ojson = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorKind::InvalidArgument, "unsupported format '" + std::string(name) + "'");
}

RowKind kind_of(const ReportRow& row) { return static_cast<RowKind>(row.index()); }

std::vector<std::string> csv_columns(RowKind kind) {
  switch (kind) {
    case RowKind::Corr:
      return {"k", "N", "n", "f", "corr", "scaled", "scaled_decimal", "limit", "abs_error_decimal"};
    case RowKind::Limit:
      return {"k", "f", "exponent", "value", "value_decimal"};
    case RowKind::Mc:
      return {"k", "N", "n", "mean", "stderr", "trials", "seed"};
    case RowKind::PPoly:
      return {"k", "m", "degree", "coefficients"};
    case RowKind::Verify:
      return {"identity", "range", "pass", "checked", "detail"};
  }
  return {};
}

namespace {

ojson to_object(const ReportRow& row, int precision) {
  ojson o;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CorrRecord>) {
          o["k"] = r.k;
          o["N"] = r.N;
          o["n"] = r.n;
          o["f"] = r.f.str();
          o["corr"] = r.corr.str();
          o["scaled"] = r.scaled.str();
          o["scaled_decimal"] = r.scaled.decimal(precision);
          o["limit"] = r.limit ? ojson(r.limit->str()) : ojson(nullptr);
          o["abs_error_decimal"] = r.abs_error ? ojson(r.abs_error->decimal(precision)) : ojson(nullptr);
        } else if constexpr (std::is_same_v<T, LimitSpec>) {
          o["k"] = r.k;
          o["f"] = r.f.str();
          o["exponent"] = r.exponent;
          o["value"] = r.value.str();
          o["value_decimal"] = r.value.decimal(precision);
        } else if constexpr (std::is_same_v<T, McRow>) {
          o["k"] = r.k;
          o["N"] = r.N;
          o["n"] = r.n;
          o["mean"] = r.estimate.mean;
          o["stderr"] = r.estimate.std_error;
          o["trials"] = r.estimate.trials;
          o["seed"] = r.estimate.seed;
        } else if constexpr (std::is_same_v<T, PPolyRow>) {
          o["k"] = r.k;
          o["m"] = r.m;
          o["degree"] = r.poly.degree();
          o["coefficients"] = ojson::parse(r.poly.to_json());
        } else {
          o["identity"] = r.identity;
          o["range"] = r.range;
          o["pass"] = r.pass;
          o["checked"] = r.checked;
          o["detail"] = r.detail;
        }
      },
      row);
  return o;
}

std::string csv_field(const ojson& v) {
  std::string s;
  if (v.is_null()) return s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_boolean()) {
    s = v.get<bool>() ? "true" : "false";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

using Getter = std::function<std::optional<std::string>(const std::string&)>;

std::string require(const Getter& get, const std::string& key) {
  auto v = get(key);
  if (!v) throw Error(ErrorKind::InvalidArgument, "report row is missing field '" + key + "'");
  return *v;
}

template <typename T>
T to_int(const std::string& s) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error(ErrorKind::InvalidArgument, "bad integer field '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw Error(ErrorKind::InvalidArgument, "bad number field '" + s + "'");
  return v;
}

std::optional<Rational> optional_rational(const Getter& get, const std::string& key) {
  auto v = get(key);
  if (!v || v->empty()) return std::nullopt;
  return Rational::parse(*v);
}

ReportRow from_fields(RowKind kind, const Getter& get) {
  switch (kind) {
    case RowKind::Corr: {
      CorrRecord r;
      r.k = to_int<int>(require(get, "k"));
      r.N = to_int<std::int64_t>(require(get, "N"));
      r.n = to_int<std::int64_t>(require(get, "n"));
      r.f = Rational::parse(require(get, "f"));
      r.corr = Rational::parse(require(get, "corr"));
      r.scaled = Rational::parse(require(get, "scaled"));
      r.limit = optional_rational(get, "limit");
      if (r.limit) r.abs_error = (r.scaled - *r.limit).abs();
      return r;
    }
    case RowKind::Limit: {
      LimitSpec r;
      r.k = to_int<int>(require(get, "k"));
      r.f = Rational::parse(require(get, "f"));
      r.exponent = to_int<int>(require(get, "exponent"));
      r.value = Rational::parse(require(get, "value"));
      return r;
    }
    case RowKind::Mc: {
      McRow r;
      r.k = to_int<int>(require(get, "k"));
      r.N = to_int<std::int64_t>(require(get, "N"));
      r.n = to_int<std::int64_t>(require(get, "n"));
      r.estimate.mean = to_double(require(get, "mean"));
      r.estimate.std_error = to_double(require(get, "stderr"));
      r.estimate.trials = to_int<std::uint64_t>(require(get, "trials"));
      r.estimate.seed = to_int<std::uint64_t>(require(get, "seed"));
      return r;
    }
    case RowKind::PPoly: {
      PPolyRow r;
      r.k = to_int<int>(require(get, "k"));
      r.m = to_int<int>(require(get, "m"));
      r.poly = Poly::from_json(require(get, "coefficients"));
      return r;
    }
    case RowKind::Verify: {
      VerifyRow r;
      r.identity = require(get, "identity");
      r.range = require(get, "range");
      r.pass = require(get, "pass") == "true";
      r.checked = to_int<std::uint64_t>(require(get, "checked"));
      r.detail = get("detail").value_or("");
      return r;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown row kind");
}

RowKind kind_from_keys(const std::function<bool(const std::string&)>& has) {
  if (has("identity")) return RowKind::Verify;
  if (has("coefficients")) return RowKind::PPoly;
  if (has("mean")) return RowKind::Mc;
  if (has("corr")) return RowKind::Corr;
  if (has("value")) return RowKind::Limit;
  throw Error(ErrorKind::InvalidArgument, "cannot tell the report row kind");
}

}  // namespace

std::string emit_report(std::span<const ReportRow> rows, Format format, int precision, RowKind empty_kind) {
  if (precision < 1) throw Error(ErrorKind::InvalidArgument, "precision must be >= 1");
  std::string out;
  if (format == Format::Json) {
    for (const auto& row : rows) {
      out += to_object(row, precision).dump();
      out += '\n';
    }
    return out;
  }

  const RowKind kind = rows.empty() ? empty_kind : kind_of(rows.front());
  const auto cols = csv_columns(kind);
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const auto& row : rows) {
    if (kind_of(row) != kind) throw Error(ErrorKind::InvalidArgument, "CSV report rows must all be of one kind");
    ojson o = to_object(row, precision);
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_field(o[cols[i]]);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      rec.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      rec.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(rec));
      rec.clear();
      field_started = false;
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw Error(ErrorKind::InvalidArgument, "unterminated quoted CSV field");
  if (field_started || !field.empty()) {
    rec.push_back(std::move(field));
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ReportRow> parse_report(std::string_view text, Format format) {
  std::vector<ReportRow> rows;
  if (format == Format::Json) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      start = end + 1;
      if (line.empty()) continue;
      ojson o = ojson::parse(line);
      Getter get = [&](const std::string& key) -> std::optional<std::string> {
        auto it = o.find(key);
        if (it == o.end() || it->is_null()) return std::nullopt;
        if (it->is_string()) return it->get<std::string>();
        if (it->is_boolean()) return std::string(it->get<bool>() ? "true" : "false");
        return it->dump();
      };
      rows.push_back(from_fields(kind_from_keys([&](const std::string& k) { return o.contains(k); }), get));
    }
    return rows;
  }

  auto records = parse_csv(text);
  if (records.empty()) throw Error(ErrorKind::InvalidArgument, "CSV report has no header");
  const auto& header = records.front();
  auto column = [&](const std::string& key) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == key) return i;
    return std::nullopt;
  };
  const RowKind kind = kind_from_keys([&](const std::string& k) { return column(k).has_value(); });
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) throw Error(ErrorKind::InvalidArgument, "CSV row width differs from header");
    Getter get = [&](const std::string& key) -> std::optional<std::string> {
      auto c = column(key);
      if (!c) return std::nullopt;
      return rec[*c];
    };
    rows.push_back(from_fields(kind, get));
  }
  return rows;
}

}  // namespace srs
