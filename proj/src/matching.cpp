#include "ringmatch/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ringmatch {

Edge make_edge(int a, int b) {
  if (a == b) {
    throw std::invalid_argument("edge {" + std::to_string(a) + "," +
                                std::to_string(b) + "} is a loop");
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Matching::Matching(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Matching::Matching(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::vector<char> used(static_cast<size_t>(std::max(n, 1)), 0);
  for (Edge& e : edges) {
    e = make_edge(e.first, e.second);
    if (e.first < 0 || e.second >= n) {
      throw std::invalid_argument("edge " + to_string(e) +
                                  " has an endpoint outside 0.." +
                                  std::to_string(n - 1));
    }
    for (int v : {e.first, e.second}) {
      if (used[static_cast<size_t>(v)]) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in more than one edge");
      }
      used[static_cast<size_t>(v)] = 1;
    }
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

bool Matching::covers(int v) const {
  for (const Edge& e : edges_) {
    if (e.first == v || e.second == v) return true;
  }
  return false;
}

std::vector<int> Matching::uncovered() const {
  std::vector<char> used(static_cast<size_t>(std::max(n_, 1)), 0);
  for (const Edge& e : edges_) {
    used[static_cast<size_t>(e.first)] = 1;
    used[static_cast<size_t>(e.second)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (!used[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

std::string to_string(const Matching& m) {
  std::ostringstream os;
  os << "n=" << m.n() << " {";
  bool first = true;
  for (const Edge& e : m.edges()) {
    if (!first) os << ",";
    os << to_string(e);
    first = false;
  }
  os << "}";
  return os.str();
}

int color_index(int n, const Edge& e) {
  if (n < 2) throw std::invalid_argument("coloring needs at least 2 vertices");
  Edge c = make_edge(e.first, e.second);
  if (c.first < 0 || c.second >= n) {
    throw std::invalid_argument("edge " + to_string(c) +
                                " has an endpoint outside 0.." +
                                std::to_string(n - 1));
  }
  int d = c.second - c.first;
  return std::min(d, n - d);
}

Matching rotate(const Matching& m, long long alpha) {
  const int n = m.n();
  if (n == 0 || m.empty()) return m;
  int shift = static_cast<int>(((alpha % n) + n) % n);
  if (shift == 0) return m;
  std::vector<Edge> es;
  es.reserve(m.edges().size());
  for (const Edge& e : m.edges()) {
    es.push_back(make_edge((e.first + shift) % n, (e.second + shift) % n));
  }
  return Matching(n, std::move(es));
}

Matching reverse(const Matching& m) {
  const int n = m.n();
  if (m.empty()) return m;
  std::vector<Edge> es;
  es.reserve(m.edges().size());
  for (const Edge& e : m.edges()) {
    es.push_back(make_edge(n - 1 - e.first, n - 1 - e.second));
  }
  return Matching(n, std::move(es));
}

bool is_rpm(const Matching& m) {
  const int n = m.n();
  if (m.size() != n / 2) return false;
  std::vector<char> seen(static_cast<size_t>(n / 2 + 1), 0);
  for (const Edge& e : m.edges()) {
    int c = color_index(n, e);
    if (seen[static_cast<size_t>(c)]) return false;
    seen[static_cast<size_t>(c)] = 1;
  }
  return true;
}

std::optional<std::string> rpm_failure(const Matching& m) {
  const int n = m.n();
  if (m.size() != n / 2) {
    return "expected " + std::to_string(n / 2) +
           " edges (one per color) on " + std::to_string(n) +
           " vertices, got " + std::to_string(m.size());
  }
  std::vector<Edge> owner(static_cast<size_t>(n / 2 + 1), Edge{-1, -1});
  for (const Edge& e : m.edges()) {
    int c = color_index(n, e);
    Edge& prev = owner[static_cast<size_t>(c)];
    if (prev.first >= 0) {
      return "edges " + to_string(prev) + " and " + to_string(e) +
             " share color " + std::to_string(c);
    }
    prev = e;
  }
  return std::nullopt;
}

bool is_cuttable(const Matching& m) { return !cuttable_failure(m); }

std::optional<std::string> cuttable_failure(const Matching& m) {
  if (auto why = rpm_failure(m)) {
    throw std::invalid_argument("cuttable check needs a rainbow matching: " +
                                *why);
  }
  const int n = m.n();
  for (const Edge& e : m.edges()) {
    int d = e.second - e.first;
    if (2 * d > n) {
      return "edge " + to_string(e) + " spans " + std::to_string(d) +
             " labels, more than half of " + std::to_string(n);
    }
  }
  return std::nullopt;
}

}  // namespace ringmatch
