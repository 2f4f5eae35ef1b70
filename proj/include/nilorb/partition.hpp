#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

/// A Young diagram: weakly decreasing positive row lengths. The empty
/// diagram is allowed. Values are immutable; every operation below returns
/// a fresh partition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Builds the partition whose column lengths are `columns` (which must
    /// themselves be weakly decreasing and positive).
    static Partition from_columns(std::span<const int> columns);

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Length of the first row, 0 when empty.
    int first_row() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// Length of the first column, i.e. the number of rows.
    int first_column() const noexcept { return static_cast<int>(parts_.size()); }

    /// Number of rows of length exactly `value`.
    int multiplicity(int value) const noexcept;

    std::vector<int> columns() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts; a total order for containers, unrelated to dominance.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition transpose(const Partition& p);

/// Adds one box to the first row (`d^+`).
Partition grow(const Partition& p);

/// Removes one box from the last row (`d^-`). Throws EmptyDiagram.
Partition shrink(const Partition& p);

Partition strip_first_column(const Partition& p);
Partition strip_first_row(const Partition& p);

/// Inverse of strip_first_row. Throws RowTooShort if `len < first_row()`.
Partition prepend_row(const Partition& p, int len);

/// Inverse of strip_first_column. Throws ColumnTooShort if `len < first_column()`.
Partition prepend_column(const Partition& p, int len);

/// Dominance order: every prefix sum of `p` is at most that of `q`.
/// Throws SizeMismatch when the sizes differ.
bool dominance_leq(const Partition& p, const Partition& q);

inline constexpr int kDefaultEnumerationBound = 40;

/// All partitions of `n` in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultEnumerationBound);

/// Canonical text form: "3,1"; the empty diagram is "-".
std::string to_string(const Partition& p);

/// Parses the canonical text form. Parts given out of order are rejected.
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace nilorb
