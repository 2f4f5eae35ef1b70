#pragma once

#include "nilorb/orbit_types.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

struct FamilySize {
    Family family;
    int size;

    friend bool operator==(const FamilySize&, const FamilySize&) = default;
};

/// Source and target of a duality: a Langlands pair (B,2n+1)<->(C,2n),
/// (D,2n)<->(D,2n), or the metaplectic pair (C,2n)<->(C,2n).
class DualPair {
public:
    /// Throws InvalidDualPair when the two sides are not dual.
    DualPair(FamilySize source, FamilySize target);

    /// The Langlands dual target of (`source`, `size`).
    static DualPair langlands(Family source, int size);
    static DualPair metaplectic(int size);

    const FamilySize& source() const noexcept { return source_; }
    const FamilySize& target() const noexcept { return target_; }
    bool is_metaplectic() const noexcept {
        return source_.family == Family::C && target_.family == Family::C;
    }

private:
    FamilySize source_;
    FamilySize target_;
};

// Classical dualities, indexed by the family of the source diagram.

/// Lusztig-Spaltenstein: the `f`-collapse of the transpose.
Partition d_LS(const Partition& p, Family f);

/// Special-orbit bijection onto the Langlands dual family:
/// B: C-collapse of p^-;  C: B-collapse of p^+;  D: identity.
Partition d_SP(const Partition& p, Family source);

/// BV duality d_SP o d_LS. A metaplectic pair routes to md_BV.
Partition d_BV(const Partition& p, const DualPair& pair);

// Metaplectic dualities on sp_2n.

/// D-collapse of the transpose; lands in the special orbits of o_2n.
Partition md_LS(const Partition& p);

/// C-collapse of (p^+)^- for a special type-D orbit; lands in the
/// metaplectic special orbits of sp_2n.
Partition md_SP(const Partition& p);

Partition md_BV(const Partition& p);

/// Orbit attached to the stable-range lift sp_2n -> o_{2n+2a+1}: prepend a
/// first column of length 2a+1. Requires a >= n; the type-B result is
/// checked at runtime (LiftNotTypeB).
Partition theta_lift_orbit(const Partition& p, int a);

}  // namespace nilorb
