#pragma once

#include <utility>
#include <vector>

#include "ringmatch/matching.hpp"

namespace ringmatch {

/// The classical circle-method matching {{i, n-1-i}}: every edge balanced
/// around the axis through the gap between vertex n-1 and vertex 0. Defined
/// for every n >= 0, but rainbow only for n = 2 and odd n; callers that need
/// an RPM should check is_rpm.
Matching kirkman(int n);

/// The two rotations of kirkman(n) by +/- floor((n+1)/4), which are cuttable
/// RPMs (kirkman itself is not cuttable for n >= 3). Requires n odd or n = 2
/// so that kirkman(n) is an RPM.
std::pair<Matching, Matching> cuttable_kirkman_rotations(int n);

/// Rainbow perfect matching for even vertex counts n = 8k or 8k+2 (k >= 1),
/// plus the trivial n = 0 and n = 2 cases. For n = 8k+4 and 8k+6 no rainbow
/// perfect matching exists at all and this throws; odd n is the wrong parity
/// and throws too.
Matching t_matching(int n);

/// The four edge groups t_matching is assembled from, in construction order:
/// long arcs hugging the outside of the circle (odd colors), chords crossing
/// the middle, short arcs nested at the bottom (small even colors), and the
/// three filler edges that absorb the leftover vertices and colors.
struct TMatchingParts {
  std::vector<Edge> outer_arcs;
  std::vector<Edge> cross_chords;
  std::vector<Edge> inner_arcs;
  std::vector<Edge> filler;
};
TMatchingParts t_matching_parts(int n);

/// Arch-recursive-slide matching for odd n: an arch of nested edges at the
/// start of the circle, a run of "slide" edges whose far endpoints advance
/// by two, and a recursively built copy of ars(2*(n/8)+1) embedded on
/// every other remaining vertex. Always a cuttable RPM. Throws for even n.
Matching ars(int n);

/// Arch part of ars(n) (nested edges on the first vertices; odd colors).
std::vector<Edge> ars_arch(int n);

/// Slide part of ars(n) (stride-two edges covering the middle colors).
std::vector<Edge> ars_slide(int n);

/// First vertex of the even-indexed block that hosts the recursive copy
/// inside ars(n) / the family generator. Requires n odd, n >= 3.
int ars_embed_base(int n);

}  // namespace ringmatch
