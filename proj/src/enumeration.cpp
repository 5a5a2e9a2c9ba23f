#include "polarglue/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "polarglue/error.hpp"
#include "polarglue/oracle.hpp"

namespace polarglue {

std::vector<WeilSurface> enumerate_surfaces(const FieldParam& field, SurfaceFilter filter) {
  const std::int64_t q = field.q();
  const std::int64_t a1_max = isqrt(16 * q);
  std::vector<WeilSurface> out;
  for (std::int64_t a1 = -a1_max; a1 <= a1_max; ++a1) {
    // Smallest x = a2 + 2q >= 0 with x^2 >= 4 a1^2 q, and a1^2 - 4 a2 + 8q >= 0.
    std::int64_t x = isqrt(4 * a1 * a1 * q);
    if (x * x < 4 * a1 * a1 * q) ++x;
    const std::int64_t lo = x - 2 * q;
    const std::int64_t hi = (a1 * a1 + 8 * q) / 4;
    for (std::int64_t a2 = lo; a2 <= hi; ++a2) {
      WeilSurface s = make_surface(field, a1, a2);
      if (filter.ordinary && classify_p_rank(s) != PRank::Ordinary) continue;
      if (filter.geometrically_simple && !is_geometrically_simple(s).simple) continue;
      out.push_back(s);
    }
  }
  return out;
}

bool is_admissible_trace(const FieldParam& field, std::int64_t b) {
  const std::int64_t q = field.q();
  const std::int64_t p = field.p();
  const int a = field.exponent();
  if (b * b > 4 * q) return false;
  if (b % p != 0) return true;
  const std::int64_t abs_b = std::llabs(b);
  if (a % 2 == 0) {
    const std::int64_t root = *field.sqrt_q();
    if (abs_b == 2 * root) return true;
    if (abs_b == root && p % 3 != 1) return true;
    if (b == 0 && p % 4 != 1) return true;
    return false;
  }
  if (b == 0) return true;
  return (p == 2 || p == 3) && abs_b == checked_pow(p, (a + 1) / 2);
}

std::vector<WeilElliptic> enumerate_elliptics(const FieldParam& field, EllipticFilter filter) {
  const std::int64_t b_max = isqrt(4 * field.q());
  std::vector<WeilElliptic> out;
  for (std::int64_t b = -b_max; b <= b_max; ++b) {
    WeilElliptic e = make_elliptic(field, b);
    if (filter.irreducible && !e.irreducible()) continue;
    if (filter.admissible && !is_admissible_trace(field, b)) continue;
    out.push_back(e);
  }
  return out;
}

namespace {

ScanRow evaluate_row(const WeilSurface& a, const WeilElliptic& b, bool simple, const DecideOptions& options) {
  ScanRow row;
  row.a1 = a.a1();
  row.a2 = a.a2();
  row.b = b.b();
  row.surface_rank = classify_p_rank(a);
  row.elliptic_rank = classify_p_rank(b);
  row.geometrically_simple = simple;
  try {
    row.h_b = eval_real(real_weil(a), b.b());
    if (row.h_b != 0) {
      for (const auto& [ell, e] : factor_integer(row.h_b).factors) {
        if (ell != a.field().p() && is_exceptional(a, ell).exceptional) row.exceptional_primes.push_back(ell);
      }
    }
    if (options.require_geometric_simplicity && !simple) {
      throw Error(ErrorCode::NotGeometricallySimple, "A is not geometrically simple");
    }
    row.verdict = decide(a, b, DecideOptions{false});
  } catch (const Error& err) {
    row.error = err.what();
  }
  return row;
}

}  // namespace

ScanRow scan_row(const WeilSurface& a, const WeilElliptic& b, const DecideOptions& options) {
  return evaluate_row(a, b, is_geometrically_simple(a).simple, options);
}

std::vector<ScanRow> scan_pairs(const FieldParam& field, const ScanOptions& options) {
  SurfaceFilter unfiltered = options.surfaces;
  unfiltered.geometrically_simple = false;
  std::vector<WeilSurface> surfaces;
  std::vector<bool> simple;
  for (const WeilSurface& s : enumerate_surfaces(field, unfiltered)) {
    const bool is_simple = is_geometrically_simple(s).simple;
    if (options.surfaces.geometrically_simple && !is_simple) continue;
    surfaces.push_back(s);
    simple.push_back(is_simple);
  }
  const std::vector<WeilElliptic> elliptics = enumerate_elliptics(field, options.elliptics);
  const std::size_t total = surfaces.size() * elliptics.size();
  std::vector<ScanRow> rows(total);
  if (total == 0) return rows;

  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, total));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const std::size_t si = i / elliptics.size();
      rows[i] = evaluate_row(surfaces[si], elliptics[i % elliptics.size()], simple[si], DecideOptions{});
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace polarglue
