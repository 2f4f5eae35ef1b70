#include "nilorb/orbit_types.hpp"

#include <algorithm>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

// Every part of the given parity must occur an even number of times.
bool parity_parts_paired(const Partition& p, int parity) {
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == parity && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

void require_type(const Partition& p, Family f) {
    if (!is_type(p, f)) {
        throw Error(ErrorCode::NotAnOrbit,
                    to_string(p) + " is not a type " + std::string(1, to_char(f)) + " orbit");
    }
}

}  // namespace

char to_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

std::optional<Family> parse_family(std::string_view text) {
    if (text == "A") return Family::A;
    if (text == "B") return Family::B;
    if (text == "C") return Family::C;
    if (text == "D") return Family::D;
    return std::nullopt;
}

std::string_view to_string(OrbitFilter filter) {
    switch (filter) {
        case OrbitFilter::All: return "all";
        case OrbitFilter::Special: return "sp";
        case OrbitFilter::MetaplecticSpecial: return "ms";
    }
    return "?";
}

std::optional<OrbitFilter> parse_filter(std::string_view text) {
    if (text == "all") return OrbitFilter::All;
    if (text == "sp" || text == "special") return OrbitFilter::Special;
    if (text == "ms" || text == "metaplectic_special") return OrbitFilter::MetaplecticSpecial;
    return std::nullopt;
}

bool size_parity_ok(int size, Family f) {
    switch (f) {
        case Family::A: return true;
        case Family::B: return size % 2 == 1;
        case Family::C:
        case Family::D: return size % 2 == 0;
    }
    return false;
}

bool is_type(const Partition& p, Family f) {
    if (!size_parity_ok(p.size(), f)) return false;
    switch (f) {
        case Family::A: return true;
        case Family::B:
        case Family::D: return parity_parts_paired(p, 0);
        case Family::C: return parity_parts_paired(p, 1);
    }
    return false;
}

bool is_special(const Partition& p, Family f) {
    require_type(p, f);
    // Outside the metaplectic story; the usual convention.
    if (f == Family::A) return true;
    const Family dual_shape = f == Family::B ? Family::B : Family::C;
    return is_type(transpose(p), dual_shape);
}

bool is_metaplectic_special(const Partition& p) {
    require_type(p, Family::C);
    return is_type(transpose(p), Family::D);
}

std::vector<Partition> enumerate_orbits(Family f, int size, OrbitFilter filter, int bound) {
    if (!size_parity_ok(size, f)) {
        throw Error(ErrorCode::ParityMismatch, "size " + std::to_string(size) +
                                                   " has the wrong parity for type " +
                                                   std::string(1, to_char(f)));
    }
    if (filter == OrbitFilter::MetaplecticSpecial && f != Family::C) {
        throw Error(ErrorCode::InvalidFilter, "metaplectic special orbits live in type C only");
    }
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(size, bound)) {
        if (!is_type(p, f)) continue;
        if (filter == OrbitFilter::Special && !is_special(p, f)) continue;
        if (filter == OrbitFilter::MetaplecticSpecial && !is_metaplectic_special(p)) continue;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<HasseEdge> hasse_edges(const std::vector<Partition>& orbits) {
    std::vector<Partition> nodes;
    for (const auto& p : orbits) {
        if (!nodes.empty() && p.size() != nodes.front().size()) {
            throw Error(ErrorCode::SizeMismatch, "hasse diagram needs diagrams of one size");
        }
        if (std::find(nodes.begin(), nodes.end(), p) == nodes.end()) nodes.push_back(p);
    }

    const std::size_t count = nodes.size();
    std::vector<std::vector<char>> below(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            below[i][j] = i != j && dominance_leq(nodes[i], nodes[j]);
        }
    }

    std::vector<HasseEdge> edges;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (!below[i][j]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < count && covered; ++k) {
                if (below[i][k] && below[k][j]) covered = false;
            }
            if (covered) edges.emplace_back(nodes[i], nodes[j]);
        }
    }
    return edges;
}

}  // namespace nilorb
