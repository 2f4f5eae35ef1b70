#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

/// Classical type: A = gl_n, B = o_{2n+1}, C = sp_{2n}, D = o_{2n}.
enum class Family { A, B, C, D };

enum class OrbitFilter { All, Special, MetaplecticSpecial };

char to_char(Family f);
std::optional<Family> parse_family(std::string_view text);
std::string_view to_string(OrbitFilter filter);
/// Accepts "all", "sp"/"special", "ms"/"metaplectic_special".
std::optional<OrbitFilter> parse_filter(std::string_view text);

/// Whether `size` has the parity a diagram of family `f` must have.
bool size_parity_ok(int size, Family f);

/// Whether `p` is the Young diagram of a nilpotent orbit of type `f`:
/// B/D need even parts with even multiplicity, C needs odd parts with even
/// multiplicity, plus the size parity. Never throws.
bool is_type(const Partition& p, Family f);

/// Special orbits: the transpose is of type B (for B) or C (for C and D).
/// Every type-A orbit counts as special. Throws NotAnOrbit.
bool is_special(const Partition& p, Family f);

/// A type-C orbit whose transpose is of type D. Throws NotAnOrbit.
bool is_metaplectic_special(const Partition& p);

std::vector<Partition> enumerate_orbits(Family f, int size, OrbitFilter filter,
                                        int bound = kDefaultEnumerationBound);

using HasseEdge = std::pair<Partition, Partition>;

/// Covering relations of dominance restricted to `orbits`, each edge
/// oriented (smaller, larger). Throws SizeMismatch on mixed sizes.
std::vector<HasseEdge> hasse_edges(const std::vector<Partition>& orbits);

}  // namespace nilorb
