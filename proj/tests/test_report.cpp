#include "doctest.h"

#include <string>
#include <vector>

#include "core/correlation.hpp"
#include "core/ppoly.hpp"
#include "core/report.hpp"

using srs::Format;
using srs::Rational;
using srs::ReportRow;
using srs::RowKind;

namespace {

std::vector<ReportRow> corr_rows() {
  std::vector<ReportRow> rows;
  rows.push_back(srs::make_record(2, 10, 5));
  rows.push_back(srs::make_record(5, 30, 11, Rational::parse("1/3")));
  rows.push_back(srs::make_record(3, 7, 0));  // no limit
  return rows;
}

void check_same(const ReportRow& a, const ReportRow& b) {
  REQUIRE(a.index() == b.index());
  if (auto* x = std::get_if<srs::CorrRecord>(&a)) {
    auto& y = std::get<srs::CorrRecord>(b);
    CHECK(x->k == y.k);
    CHECK(x->N == y.N);
    CHECK(x->n == y.n);
    CHECK(x->f == y.f);
    CHECK(x->corr == y.corr);
    CHECK(x->scaled == y.scaled);
    CHECK(x->limit == y.limit);
  } else if (auto* x = std::get_if<srs::LimitSpec>(&a)) {
    auto& y = std::get<srs::LimitSpec>(b);
    CHECK(x->k == y.k);
    CHECK(x->f == y.f);
    CHECK(x->value == y.value);
    CHECK(x->exponent == y.exponent);
  } else if (auto* x = std::get_if<srs::PPolyRow>(&a)) {
    auto& y = std::get<srs::PPolyRow>(b);
    CHECK(x->k == y.k);
    CHECK(x->m == y.m);
    CHECK(x->poly == y.poly);
  } else if (auto* x = std::get_if<srs::McRow>(&a)) {
    auto& y = std::get<srs::McRow>(b);
    CHECK(x->estimate.mean == y.estimate.mean);
    CHECK(x->estimate.std_error == y.estimate.std_error);
    CHECK(x->estimate.trials == y.estimate.trials);
    CHECK(x->estimate.seed == y.estimate.seed);
  } else {
    auto& x2 = std::get<srs::VerifyRow>(a);
    auto& y = std::get<srs::VerifyRow>(b);
    CHECK(x2.identity == y.identity);
    CHECK(x2.range == y.range);
    CHECK(x2.pass == y.pass);
    CHECK(x2.checked == y.checked);
    CHECK(x2.detail == y.detail);
  }
}

void round_trip(const std::vector<ReportRow>& rows) {
  for (Format fmt : {Format::Json, Format::Csv}) {
    auto back = srs::parse_report(srs::emit_report(rows, fmt, 12), fmt);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) check_same(rows[i], back[i]);
  }
}

}  // namespace

TEST_CASE("JSON lines carry exact rationals") {
  std::vector<ReportRow> one{srs::make_record(2, 10, 5)};
  std::string text = srs::emit_report(one, Format::Json, 12);
  CHECK(text ==
        R"({"k":2,"N":10,"n":5,"f":"1/2","corr":"-1/36","scaled":"-5/18","scaled_decimal":"-0.277777777778","limit":"-1/4","abs_error_decimal":"0.027777777778"})"
        "\n");
  CHECK(srs::emit_report(one, Format::Json, 6).find(R"("scaled_decimal":"-0.277778")") != std::string::npos);
}

TEST_CASE("CSV header and quoting") {
  std::vector<ReportRow> none;
  CHECK(srs::emit_report(none, Format::Csv, 6, RowKind::Limit) == "k,f,exponent,value,value_decimal\n");
  CHECK(srs::emit_report(none, Format::Json, 6).empty());

  std::vector<ReportRow> v{srs::VerifyRow{"odd, \"quoted\"", "a<=b", true, 3, ""}};
  std::string csv = srs::emit_report(v, Format::Csv, 6);
  CHECK(csv.find(R"("odd, ""quoted""")") != std::string::npos);
  auto cells = srs::parse_csv(csv);
  REQUIRE(cells.size() == 2);
  CHECK(cells[1][0] == "odd, \"quoted\"");
}

TEST_CASE("round trips") {
  round_trip(corr_rows());
  round_trip({srs::limit_spec(4, Rational::parse("1/2")), srs::limit_spec(7, Rational::parse("9/10"))});
  round_trip({srs::PPolyRow{5, 2, srs::p_poly(5, 2)}, srs::PPolyRow{3, 0, srs::p_poly(3, 0)}});
  round_trip({srs::McRow{3, 100, 37, srs::McEstimate{0.1 / 3.0, 1e-7, 1000, 42}}});
  round_trip({srs::VerifyRow{"id", "1<=m<=3", false, 10, "m=2: 1 != 2"}, srs::VerifyRow{"x", "y", true, 1, ""}});
}

TEST_CASE("format and precision validation") {
  CHECK(srs::parse_format("json") == Format::Json);
  CHECK(srs::parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(srs::parse_format("xml"), srs::Error);
  auto rows = corr_rows();
  CHECK_THROWS_AS(srs::emit_report(rows, Format::Json, 0), srs::Error);
  std::vector<ReportRow> mixed{srs::make_record(2, 10, 5), srs::limit_spec(2, Rational::parse("1/2"))};
  CHECK_THROWS_AS(srs::emit_report(mixed, Format::Csv, 6), srs::Error);
}
