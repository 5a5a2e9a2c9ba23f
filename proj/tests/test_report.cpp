#include <doctest.h>

#include <sstream>

#include "polarglue/enumeration.hpp"
#include "polarglue/report.hpp"

using namespace polarglue;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("verdict JSON round trip") {
  std::vector<GluingVerdict> verdicts = {
      {IrreduciblePPExists{3, Branch::Generic}, jacobian_statement(2, 3)},
      {IrreduciblePPExists{2, Branch::PBranch}, jacobian_statement(2, 2)},
      {NoIrreduciblePP{NoPPReason::HBUnit}, ""},
      {NoIrreduciblePP{NoPPReason::HL2Obstruction}, ""},
      {Inconclusive{{{3, {FailedCondition::DiscriminantIsMinusEll, FailedCondition::DoubleRootFails}},
                     {5, {FailedCondition::ExceptionalNotOrdinary}}}},
       ""},
  };
  for (const auto& v : verdicts) {
    const auto j = to_json(v);
    CHECK(j.at("kind") == std::string(v.kind()));
    CHECK(verdict_from_json(nlohmann::json::parse(j.dump())) == v);
  }
}

TEST_CASE("row records round trip over a full scan") {
  for (std::int64_t q : {2, 5, 9}) {
    ScanOptions options;
    options.surfaces = {false, false};
    for (const auto& row : scan_pairs(FieldParam::from_q(q), options)) {
      const auto j = row_record(row, q, "scan", Provenance{});
      CHECK(j.at("schema_version") == kSchemaVersion);
      CHECK(j.at("provenance").at("timestamp").is_null());
      const auto back = row_from_record(nlohmann::json::parse(j.dump()));
      CHECK(back.a1 == row.a1);
      CHECK(back.a2 == row.a2);
      CHECK(back.b == row.b);
      CHECK(back.h_b == row.h_b);
      CHECK(back.verdict == row.verdict);
      CHECK(back.error == row.error);
      CHECK(back.surface_rank == row.surface_rank);
      CHECK(back.elliptic_rank == row.elliptic_rank);
      CHECK(back.geometrically_simple == row.geometrically_simple);
      CHECK(back.exceptional_primes == row.exceptional_primes);
      CHECK(row_record(back, q, "scan", Provenance{}) == j);
    }
  }
}

TEST_CASE("records are reproducible unless stamped") {
  const auto field = FieldParam::from_q(11);
  const auto row = scan_row(make_surface(field, -2, 5), make_elliptic(field, 4));
  CHECK(row_record(row, 11, "check", Provenance{}).dump() == row_record(row, 11, "check", Provenance{}).dump());
  const auto stamped = row_record(row, 11, "check", Provenance{"2026-01-01T00:00:00Z"});
  CHECK(stamped.at("provenance").at("timestamp") == "2026-01-01T00:00:00Z");
}

TEST_CASE("CSV shape") {
  std::ostringstream out;
  const auto rows = scan_pairs(FieldParam::from_q(4), ScanOptions{{false, false}, {true, false}, 2});
  write_csv(out, rows);
  const auto lines = split(out.str(), '\n');
  REQUIRE(lines.size() == rows.size() + 2);
  CHECK(lines.front() == kCsvHeader);
  CHECK(lines.back().empty());
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == 8);
    const auto& row = rows[i - 1];
    CHECK(cols[0] == std::to_string(row.a1));
    CHECK(cols[1] == std::to_string(row.a2));
    CHECK(cols[2] == std::to_string(row.b));
    CHECK(cols[3] == std::to_string(row.h_b));
    CHECK(cols[7].rfind("A:", 0) == 0);
    if (row.verdict) {
      CHECK(cols[4] == std::string(row.verdict->kind()));
      CHECK(cols[5].empty() != row.verdict->exists());
    } else {
      CHECK(cols[4] == "Error");
      CHECK(cols[7].find(";error:") != std::string::npos);
    }
  }
}

TEST_CASE("CSV flags") {
  ScanRow row;
  row.a1 = -2;
  row.a2 = 5;
  row.b = 4;
  row.h_b = 9;
  row.geometrically_simple = true;
  row.exceptional_primes = {3};
  row.verdict = GluingVerdict{IrreduciblePPExists{3, Branch::Exceptional}, jacobian_statement(11, 3)};
  CHECK(csv_line(row) == "-2,5,4,9,IrreduciblePPExists,3,Exceptional,A:ordinary;B:ordinary;geom_simple;exceptional:3");
  row.verdict = GluingVerdict{Inconclusive{{{3, {FailedCondition::DiscriminantIsMinusEll, FailedCondition::DoubleRootFails}}}}, ""};
  row.exceptional_primes.clear();
  CHECK(csv_line(row) ==
        "-2,5,4,9,Inconclusive,,,A:ordinary;B:ordinary;geom_simple;failed:3=DiscriminantIsMinusEll+DoubleRootFails");
  row.verdict.reset();
  row.error = "NotGeometricallySimple: A is not geometrically simple";
  row.geometrically_simple = false;
  CHECK(csv_line(row) == "-2,5,4,9,Error,,,A:ordinary;B:ordinary;error:NotGeometricallySimple");
}

TEST_CASE("pretty output") {
  const auto field = FieldParam::from_q(2);
  const auto text = pretty_check(scan_row(make_surface(field, 1, 1), make_elliptic(field, 0)), 2);
  CHECK(text.find("verdict: IrreduciblePPExists") != std::string::npos);
  CHECK(text.find("witness l = 3") != std::string::npos);
}
