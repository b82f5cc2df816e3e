#pragma once

#include "ringmatch/matching.hpp"

namespace ringmatch {

/// Canonical representative of an RPM under rotations and reversal.
///
/// Rotates the color-1 edge onto {0, n-1}, then scans colors 2..floor(n/2):
/// the first color whose edge {i,j} has i+j != n-1 decides between keeping
/// the rotated matching (i+j < n-1) and mirroring it (i+j > n-1). If every
/// edge is balanced (i+j = n-1) the matching is a rotation of the nested
/// {i, n-1-i} matching and is returned as-is. The result is itself an RPM
/// and a fixed point of normalize. Throws std::invalid_argument for
/// non-rainbow input; the empty matching (n <= 1) normalizes to itself.
Matching normalize(const Matching& m);

/// True iff normalize(m) = m.
bool is_normalized(const Matching& m);

/// True iff a and b are connected by some rotate/reverse sequence, i.e.
/// normalize(a) = normalize(b). Both must be RPMs on the same vertex count.
bool same_class(const Matching& a, const Matching& b);

}  // namespace ringmatch
