#pragma once

// Exhaustive Weil data over a fixed F_q and batch verdicts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarglue/gluing.hpp"
#include "polarglue/weil.hpp"

namespace polarglue {

struct SurfaceFilter {
  bool ordinary = false;
  bool geometrically_simple = false;
};

struct EllipticFilter {
  bool irreducible = false;
  bool admissible = false;
};

/// Every (a1, a2) passing make_surface, lexicographic in (a1, a2).
std::vector<WeilSurface> enumerate_surfaces(const FieldParam& field, SurfaceFilter filter = {});

/// Every b with b^2 <= 4q, ascending.
std::vector<WeilElliptic> enumerate_elliptics(const FieldParam& field, EllipticFilter filter = {});

/// Whether t^2 - b t + q is the Weil polynomial of some elliptic curve over F_q.
bool is_admissible_trace(const FieldParam& field, std::int64_t b);

struct ScanRow {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t b = 0;
  std::int64_t h_b = 0;
  /// Exactly one of verdict and error is set.
  std::optional<GluingVerdict> verdict;
  std::optional<std::string> error;
  PRank surface_rank = PRank::Ordinary;
  PRank elliptic_rank = PRank::Ordinary;
  bool geometrically_simple = false;
  /// Primes l != p dividing h(b) that are exceptional for A.
  std::vector<std::int64_t> exceptional_primes;
};

struct ScanOptions {
  SurfaceFilter surfaces{false, true};
  EllipticFilter elliptics{true, false};
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
};

/// Surfaces x elliptics, row i * |elliptics| + j for the i-th surface and j-th curve.
std::vector<ScanRow> scan_pairs(const FieldParam& field, const ScanOptions& options = {});

/// One row, as scan_pairs computes it.
ScanRow scan_row(const WeilSurface& a, const WeilElliptic& b, const DecideOptions& options = {});

}  // namespace polarglue
