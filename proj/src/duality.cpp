#include "nilorb/duality.hpp"

#include <string>

#include "nilorb/collapse.hpp"
#include "nilorb/error.hpp"

namespace nilorb {

namespace {

std::string describe(const FamilySize& fs) {
    return std::string(1, to_char(fs.family)) + std::to_string(fs.size);
}

void require_type(const Partition& p, Family f) {
    if (!is_type(p, f)) {
        throw Error(ErrorCode::NotAnOrbit,
                    to_string(p) + " is not a type " + std::string(1, to_char(f)) + " orbit");
    }
}

void require_special(const Partition& p, Family f) {
    require_type(p, f);
    if (!is_special(p, f)) {
        throw Error(ErrorCode::NotSpecial,
                    to_string(p) + " is not special in type " + std::string(1, to_char(f)));
    }
}

bool langlands_dual(const FamilySize& s, const FamilySize& t) {
    if (s.size < 0 || t.size < 0) return false;
    if (s.family == Family::B && t.family == Family::C) return s.size == t.size + 1;
    if (s.family == Family::C && t.family == Family::B) return t.size == s.size + 1;
    if (s.family == Family::D && t.family == Family::D) return s.size == t.size;
    return false;
}

}  // namespace

DualPair::DualPair(FamilySize source, FamilySize target) : source_(source), target_(target) {
    const bool metaplectic = source.family == Family::C && target.family == Family::C &&
                             source.size == target.size;
    const bool parity = size_parity_ok(source.size, source.family) &&
                        size_parity_ok(target.size, target.family);
    if (!parity || !(metaplectic || langlands_dual(source, target))) {
        throw Error(ErrorCode::InvalidDualPair,
                    describe(source) + " and " + describe(target) + " are not dual");
    }
}

DualPair DualPair::langlands(Family source, int size) {
    switch (source) {
        case Family::B: return DualPair({Family::B, size}, {Family::C, size - 1});
        case Family::C: return DualPair({Family::C, size}, {Family::B, size + 1});
        case Family::D: return DualPair({Family::D, size}, {Family::D, size});
        case Family::A: break;
    }
    throw Error(ErrorCode::UnsupportedFamily, "no Langlands pair is modelled for type A");
}

DualPair DualPair::metaplectic(int size) { return DualPair({Family::C, size}, {Family::C, size}); }

Partition d_LS(const Partition& p, Family f) {
    require_type(p, f);
    return collapse(transpose(p), f);
}

Partition d_SP(const Partition& p, Family source) {
    if (source == Family::A) {
        throw Error(ErrorCode::UnsupportedFamily, "d_SP is defined for types B, C and D");
    }
    require_special(p, source);
    switch (source) {
        case Family::B: return collapse(shrink(p), Family::C);
        case Family::C: return collapse(grow(p), Family::B);
        default: return p;
    }
}

Partition d_BV(const Partition& p, const DualPair& pair) {
    if (pair.is_metaplectic()) return md_BV(p);
    if (p.size() != pair.source().size) {
        throw Error(ErrorCode::NotAnOrbit, to_string(p) + " does not have size " +
                                               std::to_string(pair.source().size));
    }
    return d_SP(d_LS(p, pair.source().family), pair.source().family);
}

Partition md_LS(const Partition& p) {
    require_type(p, Family::C);
    return collapse(transpose(p), Family::D);
}

Partition md_SP(const Partition& p) {
    require_special(p, Family::D);
    return collapse(shrink(grow(p)), Family::C);
}

Partition md_BV(const Partition& p) { return md_SP(md_LS(p)); }

Partition theta_lift_orbit(const Partition& p, int a) {
    require_type(p, Family::C);
    const int n = p.size() / 2;
    if (a < n) {
        throw Error(ErrorCode::StableRangeViolated,
                    "a=" + std::to_string(a) + " is below the stable range a >= " + std::to_string(n));
    }
    auto lifted = prepend_column(p, 2 * a + 1);
    if (!is_type(lifted, Family::B)) {
        throw Error(ErrorCode::LiftNotTypeB, to_string(lifted) + " is not of type B");
    }
    return lifted;
}

}  // namespace nilorb
