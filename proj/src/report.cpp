#include "polarglue/report.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <ostream>
#include <sstream>

#include "polarglue/error.hpp"
#include "polarglue/oracle.hpp"

namespace polarglue {

using nlohmann::json;

Provenance stamped_provenance() {
  std::time_t when = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    when = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm utc{};
  gmtime_r(&when, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {std::string(buf)};
}

namespace {

json provenance_json(const Provenance& prov) {
  json j = {{"tool", kToolName}, {"version", kToolVersion}, {"timestamp", nullptr}};
  if (prov.timestamp) j["timestamp"] = *prov.timestamp;
  return j;
}

json poly_json(const ResiduePoly& g) {
  return {{"text", to_string(g)}, {"coefficients", std::vector<std::int64_t>(g.coefficients().begin(), g.coefficients().end())}};
}

json pattern_json(const FactorPattern& pattern) {
  json factors = json::array();
  for (const auto& [g, e] : pattern.factors) {
    json f = poly_json(g);
    f["multiplicity"] = e;
    factors.push_back(std::move(f));
  }
  return {{"ell", pattern.ell}, {"leading", pattern.leading}, {"factors", std::move(factors)}};
}

PRank parse_rank(const std::string& s) {
  for (PRank r : {PRank::Ordinary, PRank::Mixed, PRank::Supersingular}) {
    if (to_string(r) == s) return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown p-rank " + s);
}

template <class T>
T require(std::optional<T> v, const std::string& what) {
  if (!v) throw Error(ErrorCode::InvalidArgument, "unknown " + what);
  return *v;
}

}  // namespace

json to_json(const GluingVerdict& v) {
  json j = {{"kind", std::string(v.kind())}, {"witness_ell", nullptr}, {"branch", nullptr},
            {"reason", nullptr},             {"failures", json::array()}, {"jacobian_text", v.jacobian_text}};
  if (const auto* e = std::get_if<IrreduciblePPExists>(&v.outcome)) {
    j["witness_ell"] = e->witness_ell;
    j["branch"] = std::string(to_string(e->branch));
  } else if (const auto* n = std::get_if<NoIrreduciblePP>(&v.outcome)) {
    j["reason"] = std::string(to_string(n->reason));
  } else {
    for (const auto& f : std::get<Inconclusive>(v.outcome).per_prime_failures) {
      json conditions = json::array();
      for (FailedCondition c : f.conditions) conditions.push_back(std::string(to_string(c)));
      j["failures"].push_back({{"ell", f.ell}, {"conditions", std::move(conditions)}});
    }
  }
  return j;
}

GluingVerdict verdict_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  GluingVerdict v;
  v.jacobian_text = j.at("jacobian_text").get<std::string>();
  if (kind == "IrreduciblePPExists") {
    v.outcome = IrreduciblePPExists{j.at("witness_ell").get<std::int64_t>(),
                                    require(parse_branch(j.at("branch").get<std::string>()), "branch")};
  } else if (kind == "NoIrreduciblePP") {
    v.outcome = NoIrreduciblePP{require(parse_reason(j.at("reason").get<std::string>()), "reason")};
  } else if (kind == "Inconclusive") {
    Inconclusive inc;
    for (const auto& f : j.at("failures")) {
      PrimeFailure failure{f.at("ell").get<std::int64_t>(), {}};
      for (const auto& c : f.at("conditions")) {
        failure.conditions.push_back(require(parse_condition(c.get<std::string>()), "condition"));
      }
      inc.per_prime_failures.push_back(std::move(failure));
    }
    v.outcome = std::move(inc);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown verdict kind " + kind);
  }
  return v;
}

json row_record(const ScanRow& row, std::int64_t q, const std::string& command, const Provenance& prov) {
  json details = {{"h_b", row.h_b},
                  {"surface_p_rank", std::string(to_string(row.surface_rank))},
                  {"elliptic_p_rank", std::string(to_string(row.elliptic_rank))},
                  {"geometrically_simple", row.geometrically_simple},
                  {"exceptional_primes", row.exceptional_primes}};
  json j = {{"schema_version", kSchemaVersion},
            {"command", command},
            {"query", {{"q", q}, {"a1", row.a1}, {"a2", row.a2}, {"b", row.b}}},
            {"verdict", nullptr},
            {"error", nullptr},
            {"details", std::move(details)},
            {"provenance", provenance_json(prov)}};
  if (row.verdict) j["verdict"] = to_json(*row.verdict);
  if (row.error) j["error"] = *row.error;
  return j;
}

ScanRow row_from_record(const json& j) {
  ScanRow row;
  const json& query = j.at("query");
  row.a1 = query.at("a1").get<std::int64_t>();
  row.a2 = query.at("a2").get<std::int64_t>();
  row.b = query.at("b").get<std::int64_t>();
  const json& details = j.at("details");
  row.h_b = details.at("h_b").get<std::int64_t>();
  row.surface_rank = parse_rank(details.at("surface_p_rank").get<std::string>());
  row.elliptic_rank = parse_rank(details.at("elliptic_p_rank").get<std::string>());
  row.geometrically_simple = details.at("geometrically_simple").get<bool>();
  row.exceptional_primes = details.at("exceptional_primes").get<std::vector<std::int64_t>>();
  if (!j.at("verdict").is_null()) row.verdict = verdict_from_json(j.at("verdict"));
  if (!j.at("error").is_null()) row.error = j.at("error").get<std::string>();
  return row;
}

json local_record(const WeilSurface& a, const LocalPrimeReport& report, const Provenance& prov) {
  json ideals = json::array();
  for (const auto& rec : report.ideals) {
    ideals.push_back({{"factor", poly_json(rec.factor)},
                      {"multiplicity", rec.multiplicity},
                      {"real_factor", poly_json(rec.real_factor)},
                      {"symmetric", rec.symmetric},
                      {"generating", rec.generating},
                      {"maximal_at", rec.maximal_at},
                      {"exceptional", rec.exceptional},
                      {"conjugate_partner", rec.conjugate_partner ? poly_json(*rec.conjugate_partner) : json(nullptr)}});
  }
  json square_root = nullptr;
  if (report.exceptional.square_root) {
    std::vector<std::int64_t> coeffs;
    for (const auto& c : report.exceptional.square_root->coefficients()) coeffs.push_back(narrow(c));
    square_root = {{"text", to_string(*report.exceptional.square_root)}, {"coefficients", coeffs}};
  }
  json body = {{"ell", report.ell},
               {"f_pattern", pattern_json(report.f_pattern)},
               {"h_pattern", pattern_json(report.h_pattern)},
               {"real_splitting", report.real_splitting ? json(std::string(to_string(*report.real_splitting))) : json(nullptr)},
               {"maximal", report.maximal},
               {"exceptional", report.exceptional.exceptional},
               {"square_root", std::move(square_root)},
               {"ideals", std::move(ideals)}};
  return {{"schema_version", kSchemaVersion},
          {"command", "local"},
          {"query", {{"q", a.q()}, {"a1", a.a1()}, {"a2", a.a2()}, {"ell", report.ell}}},
          {"report", std::move(body)},
          {"provenance", provenance_json(prov)}};
}

namespace {

constexpr const char* kObstructedText =
    "No abelian variety isogenous to A x B carries an irreducible principal polarization.";

}  // namespace

json obstruction_record(const WeilSurface& a, const ObstructionQuery& query, const Provenance& prov,
                        Obstruction& result) {
  json q = {{"q", query.q}, {"a1", query.a1}, {"a2", query.a2}, {"mode", query.s ? "hl" : "hl2"}};
  json body;
  NoPPReason reason = NoPPReason::HLObstruction;
  if (query.s) {
    const std::int64_t s = *query.s;
    q["s"] = s;
    q["n"] = query.n;
    result = hl_obstruction(a, s, query.n);
    const std::int64_t value = eval_real(real_weil(a), 2 * s);
    json valuations = json::array();
    if (value != 0) {
      for (const auto& [ell, e] : factor_integer(value).factors) {
        if (ell == a.field().p()) continue;
        valuations.push_back({{"ell", ell}, {"valuation", ss_quadratic_gluing_valuation(a, s, ell)}});
      }
    }
    body = {{"h_at_2s", value}, {"valuations", std::move(valuations)}};
  } else {
    reason = NoPPReason::HL2Obstruction;
    q["strict"] = query.strict;
    Hl2Report report = hl2_report(a, query.strict ? Hl2Reading::Strict : Hl2Reading::OddDivisors);
    result = report.result;
    json divisors = json::array();
    for (const auto& d : report.divisors) {
      divisors.push_back({{"ell", d.ell},
                          {"divides", d.divides},
                          {"divides_square", d.divides_square},
                          {"splitting", std::string(to_string(d.splitting))}});
    }
    body = {{"u", a.a2() + 2 * a.q()},
            {"v", 2 * a.a1()},
            {"norm", report.norm},
            {"even_divisor", report.even_divisor},
            {"divisors", std::move(divisors)}};
  }
  const bool obstructed = result == Obstruction::Obstructed;
  body["result"] = std::string(to_string(result));
  body["conclusion_text"] = obstructed ? kObstructedText : "";
  json verdict = nullptr;
  if (obstructed) verdict = to_json(GluingVerdict{NoIrreduciblePP{reason}, ""});
  return {{"schema_version", kSchemaVersion},
          {"command", "obstruct"},
          {"query", std::move(q)},
          {"obstruction", std::move(body)},
          {"verdict", std::move(verdict)},
          {"provenance", provenance_json(prov)}};
}

std::string csv_line(const ScanRow& row) {
  std::ostringstream flags;
  flags << "A:" << to_string(row.surface_rank) << ";B:" << to_string(row.elliptic_rank);
  if (row.geometrically_simple) flags << ";geom_simple";
  if (!row.exceptional_primes.empty()) {
    flags << ";exceptional:";
    for (std::size_t i = 0; i < row.exceptional_primes.size(); ++i) flags << (i ? "|" : "") << row.exceptional_primes[i];
  }
  std::string kind = "Error", witness, branch;
  if (row.verdict) {
    kind = std::string(row.verdict->kind());
    if (const auto* e = std::get_if<IrreduciblePPExists>(&row.verdict->outcome)) {
      witness = std::to_string(e->witness_ell);
      branch = std::string(to_string(e->branch));
    } else if (const auto* n = std::get_if<NoIrreduciblePP>(&row.verdict->outcome)) {
      flags << ";reason:" << to_string(n->reason);
    } else {
      for (const auto& f : std::get<Inconclusive>(row.verdict->outcome).per_prime_failures) {
        flags << ";failed:" << f.ell << '=';
        for (std::size_t i = 0; i < f.conditions.size(); ++i) flags << (i ? "+" : "") << to_string(f.conditions[i]);
      }
    }
  } else if (row.error) {
    flags << ";error:" << row.error->substr(0, row.error->find(':'));
  }
  std::ostringstream line;
  line << row.a1 << ',' << row.a2 << ',' << row.b << ',' << row.h_b << ',' << kind << ',' << witness << ',' << branch
       << ',' << flags.str();
  return line.str();
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& row : rows) os << csv_line(row) << '\n';
}

std::string pretty_check(const ScanRow& row, std::int64_t q) {
  std::ostringstream out;
  out << "q = " << q << ", A = (" << row.a1 << ", " << row.a2 << "), b = " << row.b << '\n';
  out << "h(b) = " << row.h_b << ", A " << to_string(row.surface_rank) << ", B " << to_string(row.elliptic_rank)
      << '\n';
  if (row.error) {
    out << "error: " << *row.error << '\n';
    return out.str();
  }
  const GluingVerdict& v = *row.verdict;
  out << "verdict: " << v.kind() << '\n';
  if (const auto* e = std::get_if<IrreduciblePPExists>(&v.outcome)) {
    out << "witness l = " << e->witness_ell << " (" << to_string(e->branch) << ")\n" << v.jacobian_text << '\n';
  } else if (const auto* n = std::get_if<NoIrreduciblePP>(&v.outcome)) {
    out << "reason: " << to_string(n->reason) << '\n';
  } else {
    for (const auto& f : std::get<Inconclusive>(v.outcome).per_prime_failures) {
      out << "l = " << f.ell << ':';
      for (FailedCondition c : f.conditions) out << ' ' << to_string(c);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace polarglue
