#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

/// An element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt integer(int value) { return HalfInt(2 * value); }

    constexpr int twice() const noexcept { return twice_; }
    constexpr bool is_integral() const noexcept { return twice_ % 2 == 0; }
    constexpr HalfInt abs() const noexcept { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// "3/2", "1/2", "0", "-2".
std::string to_string(HalfInt h);
HalfInt parse_halfint(std::string_view text);

/// Infinitesimal character of a rank-n classical algebra, kept as its
/// canonical Weyl-orbit representative: absolute values sorted descending.
/// Signed permutations act transitively on sign/order choices, so two
/// characters agree iff their canonical forms do.
class InfChar {
public:
    InfChar() = default;
    explicit InfChar(std::vector<HalfInt> entries);

    std::span<const HalfInt> entries() const noexcept { return entries_; }
    std::size_t rank() const noexcept { return entries_.size(); }

    friend bool operator==(const InfChar&, const InfChar&) = default;

private:
    std::vector<HalfInt> entries_;
};

/// Comma list of entries; the rank-0 character prints as "-".
std::string to_string(const InfChar& c);
/// Parses a comma list of half-integers ("1/2,3/2", "-" for rank 0).
InfChar parse_infchar(std::string_view text);

/// The string attached to a row of length a: (1,...,(a-1)/2) for odd a,
/// (1/2,...,(a-1)/2) for even a; empty for a <= 1.
std::vector<HalfInt> rho(int a);

/// Concatenated rho-strings of the rows, padded with zeros to `rank`.
/// Throws RankTooSmall.
InfChar infinitesimal_character(const Partition& p, int rank);

/// Every entry lies in 1/2 + Z.
bool is_metaplectic_integral(const InfChar& c);

/// Character after the stable-range lift: appends 1/2, 3/2, ..., (2a-1)/2.
InfChar theta_lift_character(const InfChar& c, int a);

/// Rows of a type-C diagram split into distinct even rows a_1 < ... < a_{2p}
/// (a_1 may be 0) and rows that occur in pairs.
struct RowPairing {
    std::vector<int> distinct_even;  // ascending
    std::vector<int> paired;         // one entry per pair, descending
    std::vector<int> core_columns;   // (a_2p - 1, a_{2p-1} + 1, ..., a_2 - 1, a_1 + 1)

    Partition core() const { return Partition::from_columns(core_columns); }
    /// The rows of the original diagram, recovered from the decomposition.
    Partition rows() const;

    friend bool operator==(const RowPairing&, const RowPairing&) = default;
};

RowPairing row_pairing(const Partition& p);

struct UnipotentAttachment {
    InfChar character;
    Partition orbit;

    friend bool operator==(const UnipotentAttachment&, const UnipotentAttachment&) = default;
};

/// For a type-C orbit of size 2n: its rank-n character and its metaplectic
/// BV dual (md_BV).
UnipotentAttachment unipotent_attachment(const Partition& p);

}  // namespace nilorb
