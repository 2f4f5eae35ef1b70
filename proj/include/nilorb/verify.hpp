#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilorb {

/// Finite-range checks of the combinatorial statements behind the
/// metaplectic duality. Every check is a theorem; a failure is a finding.
///
///   C1   md_LS: well-defined, onto the special D-orbits, order reversing
///   C2   md_SP: order-preserving bijection special D -> metaplectic special C
///   C3   C-collapse of transpose, then strip column  ==  strip row, then md_LS
///   C4   c1(C-collapse(d)) = 2a forces c1(d) = 2a
///   C5   d1, d2 with c1(d1) odd and strip(d1) = strip(d2)^- share a B-collapse
///   C6   B-collapse of d^+, then strip column  ==  strip column, then C-collapse((.)^+)^-
///   C7   d -> B-collapse(d^+) is a bijection between the c1-constrained special sets
///   C8   strip column o d_BV o prepend_row(., 2a)  ==  md_BV
///   C9   d_LS image equals the special orbits; order reversing (B, C, D)
///   C10  d_SP is an order-preserving bijection between special sets
///   C11  collapse agrees with the brute-force oracle; idempotent, monotone
///   C12  character of prepend_row(O, 2a) equals the lifted character of O
///   C13  md_BV always lands in the metaplectic special orbits
///   C14  md_BV([2n]) = [2,1^(2n-2)] and md_BV([1^2n]) = [2n]
///
/// Checks over (n, a) let a run over n .. n + a_offset.
enum class CheckId { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14 };

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view text);
std::span<const CheckId> all_checks();
std::string_view describe(CheckId id);

/// Library operations exercised by a check (names match the public API).
std::span<const std::string_view> operations_touched(CheckId id);

/// A failing input: ordered key/value fields such as n, a, partition, property.
struct Witness {
    std::vector<std::pair<std::string, std::string>> fields;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckParams {
    int max_n = 6;
    int a_offset = 3;

    friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

struct CheckReport {
    CheckId id = CheckId::C1;
    CheckParams params;
    long long instances = 0;
    long long failures = 0;
    std::vector<Witness> witnesses;
    std::chrono::milliseconds elapsed{0};

    bool passed() const noexcept { return failures == 0; }
};

struct RunOptions {
    /// Worker threads; 1 runs every work unit on the calling thread.
    int jobs = 1;
    std::size_t witness_limit = 10;
};

/// Largest size any check enumerates; checks needing more throw BoundExceeded.
inline constexpr int kVerifyEnumerationBound = 40;

/// Runs one check over n = 0..max_n (C14: 1..max_n). Work units are merged
/// in a fixed order, so the report does not depend on `jobs` apart from
/// `elapsed`. Throws BoundExceeded or InvalidArgument.
CheckReport run_check(CheckId id, const CheckParams& params, const RunOptions& options = {});

}  // namespace nilorb
