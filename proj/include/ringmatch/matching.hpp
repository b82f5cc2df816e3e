#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ringmatch {

/// An unordered vertex pair, stored as (min, max).
using Edge = std::pair<int, int>;

/// Canonicalizes an endpoint pair. Throws std::invalid_argument on a loop.
Edge make_edge(int a, int b);

/// A matching in the complete graph on vertices 0..n-1, where the vertices
/// are thought of as points on a circle and every edge carries the circular
/// distance between its endpoints as its color.
///
/// Edges are kept canonical ((u,v) with u < v, sorted lexicographically), so
/// two matchings compare equal exactly when they have the same vertex count
/// and the same edge set. The vertex count is part of the value: the same
/// edge set on a different circle is a different matching.
class Matching {
 public:
  Matching() = default;

  /// Empty matching on n vertices.
  explicit Matching(int n);

  /// Validating constructor. Throws std::invalid_argument if an edge is a
  /// loop, an endpoint is out of 0..n-1, or two edges share a vertex.
  Matching(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  /// True iff some edge has v as an endpoint.
  bool covers(int v) const;

  /// Vertices of 0..n-1 not touched by any edge, ascending.
  std::vector<int> uncovered() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching&,
                                          const Matching&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // canonical order
};

std::string to_string(const Edge& e);
std::string to_string(const Matching& m);

/// Circular-distance color of an edge of the n-cycle's complete graph:
/// min(|u-v|, n-|u-v|). Colors range over 1..floor(n/2). Requires n >= 2 and
/// an edge valid for n.
int color_index(int n, const Edge& e);

/// Shifts every vertex by alpha around the circle (mod n). Any integer alpha
/// is accepted; congruent shifts give equal results.
Matching rotate(const Matching& m, long long alpha);

/// Mirrors the matching: vertex v maps to n-1-v. An involution.
Matching reverse(const Matching& m);

/// True iff m is a rainbow perfect matching (n even) or rainbow near-perfect
/// matching (n odd): floor(n/2) edges with pairwise distinct colors, which
/// then necessarily cover every color 1..floor(n/2).
bool is_rpm(const Matching& m);

/// Explains why m fails is_rpm, or nullopt if it passes.
std::optional<std::string> rpm_failure(const Matching& m);

/// True iff every edge {u,v} satisfies |u-v| <= n-|u-v|, i.e. the plain label
/// distance does not exceed n/2. Input must be an RPM (throws otherwise);
/// this is the property that lets a matching be re-embedded on the
/// even-indexed vertices of a larger circle.
bool is_cuttable(const Matching& m);

/// Explains why a (rainbow) matching fails the cuttable condition, or nullopt.
std::optional<std::string> cuttable_failure(const Matching& m);

}  // namespace ringmatch
