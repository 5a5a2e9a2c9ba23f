// polarglue: decide whether a surface and an elliptic curve over F_q glue to
// a principally polarized threefold with irreducible polarization.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarglue/enumeration.hpp"
#include "polarglue/error.hpp"
#include "polarglue/gluing.hpp"
#include "polarglue/local.hpp"
#include "polarglue/report.hpp"
#include "polarglue/weil.hpp"

namespace {

using namespace polarglue;

constexpr int kExitUsage = 64;
constexpr int kExitValidation = 65;
constexpr int kExitIo = 66;

struct SurfaceArgs {
  std::int64_t q = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
};

void add_surface_options(CLI::App* cmd, SurfaceArgs& args) {
  cmd->add_option("--q", args.q, "field cardinality p^a")->required();
  cmd->add_option("--a1", args.a1, "coefficient of t^3")->required();
  cmd->add_option("--a2", args.a2, "coefficient of t^2")->required();
}

int exit_code(const GluingVerdict& v) {
  switch (v.outcome.index()) {
    case 0: return 0;
    case 1: return 1;
    default: return 2;
  }
}

Provenance provenance(bool stamp) { return stamp ? stamped_provenance() : Provenance{}; }

int write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    std::cout.flush();
    return std::cout ? 0 : kExitIo;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "polarglue: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  out << payload;
  out.close();
  if (!out) {
    std::cerr << "polarglue: write to " << path << " failed\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal polarization gluing checks for abelian surfaces times elliptic curves over F_q"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_config("--config", "", "key=value config file; command line wins")->envname("POLARGLUE_CONFIG");
  app.require_subcommand(1);
  app.fallthrough();
  bool stamp = false;
  app.add_flag("--stamp", stamp, "record a timestamp (SOURCE_DATE_EPOCH if set)");

  SurfaceArgs check_args;
  std::int64_t check_b = 0;
  bool pretty = false;
  auto* check = app.add_subcommand("check", "decide a single pair (A, B)");
  add_surface_options(check, check_args);
  check->add_option("--b", check_b, "trace of the elliptic curve")->required();
  check->add_flag("--pretty", pretty, "human-readable output");
  bool skip_simplicity = false;
  check->add_flag("--skip-simplicity-check", skip_simplicity,
                  "run the per-prime test even when A is not geometrically simple");

  std::int64_t scan_q = 0;
  bool ordinary_only = false, include_non_simple = false, admissible_only = false;
  std::string scan_out = "-", scan_format = "json";
  unsigned jobs = 0;
  auto* scan = app.add_subcommand("scan", "decide every pair over F_q");
  scan->add_option("--q", scan_q, "field cardinality p^a")->required();
  scan->add_flag("--ordinary-only", ordinary_only, "keep only ordinary surfaces");
  scan->add_flag("--include-non-simple", include_non_simple, "keep surfaces that are not geometrically simple");
  scan->add_flag("--admissible-only", admissible_only, "keep only traces that occur for elliptic curves");
  scan->add_option("--out", scan_out, "output file, - for standard output");
  scan->add_option("--format", scan_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--jobs", jobs, "worker threads (0: all processors)");

  SurfaceArgs local_args;
  std::int64_t local_ell = 0;
  auto* local = app.add_subcommand("local", "classify the primes of Z[F,V] above l");
  add_surface_options(local, local_args);
  local->add_option("--ell", local_ell, "prime l != p")->required();

  SurfaceArgs ob_args;
  std::optional<std::int64_t> ob_s;
  int ob_n = 1;
  bool ss_surface = false, hl2_strict = false;
  auto* obstruct = app.add_subcommand("obstruct", "obstructions against a supersingular partner");
  add_surface_options(obstruct, ob_args);
  auto* s_opt = obstruct->add_option("--s", ob_s, "square root of q; partner E^n with E of trace 2s");
  auto* n_opt = obstruct->add_option("--n", ob_n, "power of E")->needs(s_opt);
  auto* ss_opt = obstruct->add_flag("--ss-surface", ss_surface, "partner with Weil polynomial (t^2 - q)^2");
  ss_opt->excludes(s_opt)->excludes(n_opt);
  obstruct->add_flag("--hl2-strict", hl2_strict, "with --ss-surface, conclude only when h(2s) is a unit")
      ->needs(ss_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const Provenance prov = provenance(stamp);
    if (*check) {
      const FieldParam field = FieldParam::from_q(check_args.q);
      WeilSurface a = make_surface(field, check_args.a1, check_args.a2);
      WeilElliptic b = make_elliptic(field, check_b);
      ScanRow row = scan_row(a, b, DecideOptions{!skip_simplicity});
      if (row.error) {
        std::cerr << "polarglue: " << *row.error << '\n';
        return kExitValidation;
      }
      std::string payload = pretty ? pretty_check(row, field.q()) : row_record(row, field.q(), "check", prov).dump(2) + "\n";
      int rc = write_output("-", payload);
      return rc != 0 ? rc : exit_code(*row.verdict);
    }
    if (*scan) {
      const FieldParam field = FieldParam::from_q(scan_q);
      ScanOptions options;
      options.surfaces = {ordinary_only, !include_non_simple};
      options.elliptics = {true, admissible_only};
      options.jobs = jobs;
      const std::vector<ScanRow> rows = scan_pairs(field, options);
      std::ostringstream payload;
      if (scan_format == "csv") {
        write_csv(payload, rows);
      } else {
        nlohmann::json array = nlohmann::json::array();
        for (const auto& row : rows) array.push_back(row_record(row, field.q(), "scan", prov));
        payload << array.dump(2) << '\n';
      }
      return write_output(scan_out, payload.str());
    }
    if (*local) {
      const FieldParam field = FieldParam::from_q(local_args.q);
      WeilSurface a = make_surface(field, local_args.a1, local_args.a2);
      LocalPrimeReport report = classify_prime_ideals(a, local_ell);
      return write_output("-", local_record(a, report, prov).dump(2) + "\n");
    }
    if (*obstruct) {
      if (!ob_s && !ss_surface) {
        std::cerr << "polarglue: obstruct needs --s S [--n N] or --ss-surface\n";
        return kExitUsage;
      }
      const FieldParam field = FieldParam::from_q(ob_args.q);
      WeilSurface a = make_surface(field, ob_args.a1, ob_args.a2);
      ObstructionQuery query{field.q(), a.a1(), a.a2(), ob_s, ob_n, hl2_strict};
      Obstruction result = Obstruction::NoConclusion;
      nlohmann::json record = obstruction_record(a, query, prov, result);
      int rc = write_output("-", record.dump(2) + "\n");
      return rc != 0 ? rc : (result == Obstruction::Obstructed ? 0 : 2);
    }
  } catch (const Error& e) {
    std::cerr << "polarglue: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}
