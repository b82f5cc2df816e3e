#include "ringmatch/canon.hpp"

#include <stdexcept>
#include <vector>

namespace ringmatch {

namespace {

// One edge per color for an RPM; index 1..n/2.
std::vector<Edge> edges_by_color(const Matching& m) {
  std::vector<Edge> by_color(static_cast<size_t>(m.n() / 2 + 1), Edge{-1, -1});
  for (const Edge& e : m.edges()) {
    by_color[static_cast<size_t>(color_index(m.n(), e))] = e;
  }
  return by_color;
}

}  // namespace

Matching normalize(const Matching& m) {
  if (auto why = rpm_failure(m)) {
    throw std::invalid_argument("normalize needs a rainbow matching: " + *why);
  }
  const int n = m.n();
  if (n <= 1) return m;

  Matching cur = m;
  Edge unit = edges_by_color(cur)[1];
  if (!(unit.first == 0 && unit.second == n - 1)) {
    cur = rotate(cur, -unit.second);
  }
  std::vector<Edge> by_color = edges_by_color(cur);
  for (int k = 2; k <= n / 2; ++k) {
    const Edge& e = by_color[static_cast<size_t>(k)];
    int s = e.first + e.second;
    if (s < n - 1) return cur;
    if (s > n - 1) return reverse(cur);
  }
  return cur;
}

bool is_normalized(const Matching& m) { return normalize(m) == m; }

bool same_class(const Matching& a, const Matching& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument(
        "class comparison needs matchings on the same vertex count, got " +
        std::to_string(a.n()) + " and " + std::to_string(b.n()));
  }
  return normalize(a) == normalize(b);
}

}  // namespace ringmatch
