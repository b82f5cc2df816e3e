#include "ringmatch/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ringmatch/canon.hpp"
#include "ringmatch/constructions.hpp"

namespace ringmatch {

namespace {

struct Search {
  int n;
  std::vector<std::vector<Edge>> by_color;  // index 1..n/2, canonical order
  std::optional<std::uint64_t> limit;
  std::vector<Edge> chosen;
  std::uint64_t used = 0;  // vertex bitmask
  std::vector<Matching> found;

  bool full() const { return limit && found.size() >= *limit; }

  // One vertex-disjoint edge per color, colors taken largest-first.
  void run(int color) {
    if (full()) return;
    if (color == 0) {
      found.emplace_back(n, chosen);
      return;
    }
    for (const Edge& e : by_color[static_cast<size_t>(color)]) {
      std::uint64_t mask =
          (std::uint64_t{1} << e.first) | (std::uint64_t{1} << e.second);
      if (used & mask) continue;
      used |= mask;
      chosen.push_back(e);
      run(color - 1);
      chosen.pop_back();
      used &= ~mask;
      if (full()) return;
    }
  }
};

void check_bounds(int n, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > kEnumerationHardCap) {
    throw std::invalid_argument("exhaustive search supports at most " +
                                std::to_string(kEnumerationHardCap) +
                                " vertices, got " + std::to_string(n));
  }
  if (n > kEnumerationBound && !opts.force) {
    throw std::invalid_argument(
        "exhaustive search for n = " + std::to_string(n) +
        " exceeds the default bound " + std::to_string(kEnumerationBound) +
        "; pass force to run it anyway");
  }
}

}  // namespace

std::vector<Matching> enumerate_rpms(int n, const EnumerationOptions& opts) {
  check_bounds(n, opts);
  const int colors = n / 2;

  Search s;
  s.n = n;
  s.limit = opts.limit;
  s.by_color.resize(static_cast<size_t>(colors + 1));
  for (int d = 1; d <= colors; ++d) {
    auto& list = s.by_color[static_cast<size_t>(d)];
    int starts = 2 * d == n ? n / 2 : n;  // antipodal class is half-size
    for (int i = 0; i < starts; ++i) list.push_back(make_edge(i, (i + d) % n));
    std::sort(list.begin(), list.end());
  }
  s.run(colors);

  std::sort(s.found.begin(), s.found.end());
  return std::move(s.found);
}

EnumerationReport census(int n, const EnumerationOptions& opts) {
  std::vector<Matching> all = enumerate_rpms(n, opts);
  std::set<Matching> reps;
  for (const Matching& m : all) reps.insert(normalize(m));

  EnumerationReport report;
  report.n = n;
  report.rpm_count = all.size();
  report.class_count = reps.size();
  report.representatives.assign(reps.begin(), reps.end());
  return report;
}

bool verify_property9(int n, const EnumerationOptions& opts) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument(
        "the self-mirror check applies to odd vertex counts, got " +
        std::to_string(n));
  }
  std::set<Matching> kirkman_rotations;
  for (int b = 0; b < n; ++b) kirkman_rotations.insert(rotate(kirkman(n), b));

  for (const Matching& m : enumerate_rpms(n, opts)) {
    Matching mirrored = reverse(m);
    bool self_mirrored = false;
    for (int a = 0; a < n && !self_mirrored; ++a) {
      self_mirrored = rotate(m, a) == mirrored;
    }
    if (self_mirrored && !kirkman_rotations.contains(m)) return false;
  }
  return true;
}

std::size_t orbit_size(const Matching& m) {
  const int n = std::max(m.n(), 1);
  std::set<Matching> orbit;
  for (int a = 0; a < n; ++a) {
    orbit.insert(rotate(m, a));
    orbit.insert(rotate(reverse(m), a));
  }
  return orbit.size();
}

}  // namespace ringmatch
