#pragma once

#include <vector>

#include "ringmatch/matching.hpp"

namespace ringmatch {

/// Variant operators used when a small cuttable RPM is re-embedded into a
/// larger circle: f is a fixed backward rotation, g a forward rotation of
/// the mirror image. The shift is -2k (f) / +2k (g) when n = 8k+1 or 8k+3,
/// and -2k-2 / +2k+2 when n = 8k+5 or 8k+7, where n is the vertex count of
/// m itself. Both preserve rainbow-ness; both throw for even n.
Matching f_op(const Matching& m);
Matching g_op(const Matching& m);

/// Places a cuttable RPM on 2*(n/8)+1 vertices onto the even-indexed block
/// of the n-circle: edge {i,j} maps to {base+2i, base+2j} with base =
/// ars_embed_base(n). Cuttability is what keeps the embedded edges' colors
/// equal to twice the originals' plain distances, so the result covers the
/// even colors left open by the arch and slide parts. Throws if m is not
/// cuttable or has the wrong vertex count.
std::vector<Edge> xi3_embed(int n, const Matching& m);

/// A generated collection of cuttable RPMs on an odd circle whose
/// normalizations are pairwise distinct.
struct RpmFamily {
  int n = 1;
  std::vector<Matching> members;  // deduplicated, canonical order

  int count() const { return static_cast<int>(members.size()); }
};

/// Recursively generated family of cuttable RPMs for odd n: each member of
/// family(2*(n/8)+1) contributes four candidates (itself, f_op, reverse,
/// g_op of it) to embed next to the fixed arch and slide parts; duplicates
/// are removed by edge-set equality. ars(n) is always a member. The size
/// follows |family(n)| = 4*|family(2k+1)| once 2k+1 >= 7 (with 1 and 2 for
/// the small bases), giving Theta(n) distinct classes.
RpmFamily family(int n);

}  // namespace ringmatch
