#pragma once

// JSON records and CSV rows emitted by the command-line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarglue/enumeration.hpp"
#include "polarglue/gluing.hpp"
#include "polarglue/local.hpp"

namespace polarglue {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolName = "polarglue";
inline constexpr const char* kToolVersion = "0.1.0";

struct Provenance {
  /// ISO-8601 UTC; null keeps reruns byte-identical.
  std::optional<std::string> timestamp;
};

/// Timestamp from SOURCE_DATE_EPOCH when set, else the current time.
Provenance stamped_provenance();

nlohmann::json to_json(const GluingVerdict& v);
GluingVerdict verdict_from_json(const nlohmann::json& j);

/// Record for one (surface, curve) pair; command is "check" or "scan".
nlohmann::json row_record(const ScanRow& row, std::int64_t q, const std::string& command, const Provenance& prov);
ScanRow row_from_record(const nlohmann::json& j);

nlohmann::json local_record(const WeilSurface& a, const LocalPrimeReport& report, const Provenance& prov);

struct ObstructionQuery {
  std::int64_t q = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  /// Set for the supersingular-power mode, unset for the (t^2 - q)^2 mode.
  std::optional<std::int64_t> s;
  int n = 1;
  bool strict = false;
};

/// Runs the matching obstruction and wraps it in a record; result echoes the outcome.
nlohmann::json obstruction_record(const WeilSurface& a, const ObstructionQuery& query, const Provenance& prov,
                                  Obstruction& result);

inline constexpr const char* kCsvHeader = "a1,a2,b,h_b,verdict,witness_ell,branch,flags";
std::string csv_line(const ScanRow& row);
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);

/// Human-readable summary of a check.
std::string pretty_check(const ScanRow& row, std::int64_t q);

}  // namespace polarglue
