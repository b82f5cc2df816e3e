#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringmatch/matching.hpp"

namespace ringmatch {

/// Exhaustive search refuses vertex counts above this unless forced.
inline constexpr int kEnumerationBound = 16;
/// Hard cap: the backtracker tracks used vertices in a 64-bit mask.
inline constexpr int kEnumerationHardCap = 64;

struct EnumerationOptions {
  std::optional<std::uint64_t> limit;  // stop after this many matchings
  bool force = false;                  // lift the default size guard
};

/// Every rainbow (near-)perfect matching of the circularly colored complete
/// graph on n vertices, by backtracking over the color classes (largest
/// color first, candidate edges in canonical order). The returned list is
/// sorted canonically and duplicate-free. Throws when n exceeds the guard
/// and force is not set.
std::vector<Matching> enumerate_rpms(int n,
                                     const EnumerationOptions& opts = {});

/// Exhaustive ground truth for one vertex count: the raw matching census
/// plus its partition into rotate/reverse equivalence classes, keyed by
/// normalize images.
struct EnumerationReport {
  int n = 0;
  std::uint64_t rpm_count = 0;
  std::uint64_t class_count = 0;
  std::vector<Matching> representatives;  // normalized, canonical order
};

EnumerationReport census(int n, const EnumerationOptions& opts = {});

/// Checks over all enumerated RPMs that any matching equal to a rotation of
/// its own mirror image is itself a rotation of kirkman(n). Requires odd n
/// within the enumeration guard.
bool verify_property9(int n, const EnumerationOptions& opts = {});

/// Number of distinct matchings among rot(m, a) and rot(reverse(m), a) for
/// a = 0..n-1 (the dihedral orbit of m).
std::size_t orbit_size(const Matching& m);

}  // namespace ringmatch
