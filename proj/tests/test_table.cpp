#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "qwell/table.hpp"

using namespace qwell;

TEST_CASE("format_double round-trips and is shortest") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-170.0) == "-170");
  CHECK(format_double(0.1) == "0.1");
  const double tricky = 1.0 / 3.0;
  CHECK(std::stod(format_double(tricky)) == tricky);
}

TEST_CASE("CSV writer") {
  Table t;
  t.comments = {"generated table"};
  t.columns = {"a", "b", "c"};
  t.rows.push_back({1.5, std::monostate{}, std::string("x")});

  std::ostringstream out;
  write_csv(t, out);
  CHECK(out.str() == "# generated table\na,b,c\n1.5,,x\n");

  SUBCASE("byte deterministic") {
    std::ostringstream again;
    write_csv(t, again);
    CHECK(again.str() == out.str());
  }
  SUBCASE("round trip through parse_csv") {
    std::istringstream in(out.str());
    const Table back = parse_csv(in);
    CHECK(back.columns == t.columns);
    REQUIRE(back.rows.size() == 1);
    CHECK(std::get<double>(back.rows[0][0]) == 1.5);
    CHECK(std::holds_alternative<std::monostate>(back.rows[0][1]));
    CHECK(std::get<std::string>(back.rows[0][2]) == "x");
  }
}

TEST_CASE("JSON writer") {
  Table t;
  t.columns = {"a", "b"};
  t.rows.push_back({2.0, std::monostate{}});
  std::ostringstream out;
  write_json(t, out);
  const std::string s = out.str();
  CHECK(s.find("\"a\"") != std::string::npos);
  CHECK(s.find("null") != std::string::npos);  // absent cell
  CHECK(s.find("2.0") != std::string::npos);
}

TEST_CASE("comparison rows serialize in long format") {
  ComparisonRow row{};
  row.kind = PotentialKind::Gaussian;
  row.xi = 200.0;
  row.n = 0;
  row.l = 0;
  row.e_koksal = -170.5;
  row.e_variational = -170.9;
  row.e_reference = -170.95;
  row.abs_err_koksal = 0.45;
  row.abs_err_variational = 0.05;
  row.rel_err_koksal = 0.45 / 170.95;
  row.rel_err_variational = 0.05 / 170.95;

  const Table t = to_table(std::vector<ComparisonRow>{row});
  CHECK(t.columns == std::vector<std::string>{"potential", "xi", "n", "l", "method", "energy",
                                              "ref_energy", "abs_err", "rel_err"});
  // one row per method: koksal, variational, reference
  REQUIRE(t.rows.size() == 3);
  CHECK(std::get<std::string>(t.rows[0][4]) == "koksal");
  CHECK(std::get<std::string>(t.rows[1][4]) == "variational");
  CHECK(std::get<std::string>(t.rows[2][4]) == "reference");
  // reference rows carry no error cells
  CHECK(std::holds_alternative<std::monostate>(t.rows[2][7]));
  CHECK(std::holds_alternative<std::monostate>(t.rows[2][8]));
  CHECK(std::get<double>(t.rows[0][5]) == -170.5);

  SUBCASE("methods without values produce no rows") {
    row.e_variational.reset();
    row.abs_err_variational.reset();
    row.rel_err_variational.reset();
    const Table t2 = to_table(std::vector<ComparisonRow>{row});
    CHECK(t2.rows.size() == 2);
  }
}

TEST_CASE("critical rows serialize in long format") {
  const CriticalRow row(PotentialKind::Yukawa, 1, std::nullopt, 128.0 / 27.0, 4.54);
  const Table t = to_table(std::vector<CriticalRow>{row});
  CHECK(t.columns == std::vector<std::string>{"potential", "l", "method", "xi_crit", "ref_xi",
                                              "abs_err", "rel_err"});
  // koksal is absent for Yukawa: variational + reference rows only
  REQUIRE(t.rows.size() == 2);
  CHECK(std::get<std::string>(t.rows[0][0]) == "yukawa");
  CHECK(std::get<std::string>(t.rows[0][2]) == "variational");
  CHECK(std::get<std::string>(t.rows[1][2]) == "reference");
}

TEST_CASE("output format names") {
  CHECK(output_format_from_string("csv") == OutputFormat::Csv);
  CHECK(output_format_from_string("json") == OutputFormat::Json);
  CHECK_THROWS_AS(output_format_from_string("yaml"), std::domain_error);
}
