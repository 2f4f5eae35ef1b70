#pragma once

#include "nilorb/orbit_types.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

/// The largest type-`f` partition dominated by `p` (f in B, C, D).
///
/// Repeatedly takes the largest "bad" part q (even parts of odd
/// multiplicity for B/D, odd parts of odd multiplicity for C), lowers its
/// last occurrence by one and raises the first later part smaller than q-1
/// by one. Each step moves strictly down in dominance and the result is
/// typed. Throws ParityMismatch or UnsupportedFamily.
Partition collapse(const Partition& p, Family f);

inline constexpr int kDefaultOracleBound = 18;

/// Brute-force collapse: the dominance maximum of all type-`f` partitions
/// of the same size lying below `p`. Testing oracle for `collapse`;
/// throws NoMaximum if that set has no maximum.
Partition collapse_oracle(const Partition& p, Family f, int bound = kDefaultOracleBound);

}  // namespace nilorb
