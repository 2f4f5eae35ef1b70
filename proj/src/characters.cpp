#include "nilorb/characters.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "nilorb/duality.hpp"
#include "nilorb/error.hpp"
#include "nilorb/orbit_types.hpp"

namespace nilorb {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::ParseError, "bad half-integer '" + std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

std::string to_string(HalfInt h) {
    if (h.is_integral()) return std::to_string(h.twice() / 2);
    return std::to_string(h.twice()) + "/2";
}

HalfInt parse_halfint(std::string_view text) {
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return HalfInt::integer(parse_int(s, text));
    if (parse_int(s.substr(slash + 1), text) != 2) {
        throw Error(ErrorCode::ParseError, "denominator must be 2 in '" + std::string(text) + "'");
    }
    return HalfInt::from_twice(parse_int(s.substr(0, slash), text));
}

InfChar::InfChar(std::vector<HalfInt> entries) : entries_(std::move(entries)) {
    for (auto& e : entries_) e = e.abs();
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

std::string to_string(const InfChar& c) {
    if (c.rank() == 0) return "-";
    std::string out;
    for (std::size_t i = 0; i < c.rank(); ++i) {
        if (i) out += ',';
        out += to_string(c.entries()[i]);
    }
    return out;
}

InfChar parse_infchar(std::string_view text) {
    auto s = trim(text);
    if (s == "-") return InfChar{};
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty character text (use \"-\")");
    std::vector<HalfInt> entries;
    while (true) {
        const auto comma = s.find(',');
        entries.push_back(parse_halfint(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return InfChar(std::move(entries));
}

std::vector<HalfInt> rho(int a) {
    std::vector<HalfInt> out;
    // 1, 2, ... for odd a; 1/2, 3/2, ... for even a; up to (a-1)/2.
    for (int twice = a % 2 == 1 ? 2 : 1; twice <= a - 1; twice += 2) {
        out.push_back(HalfInt::from_twice(twice));
    }
    return out;
}

InfChar infinitesimal_character(const Partition& p, int rank) {
    std::vector<HalfInt> entries;
    int odd_rows = 0;
    for (int row : p.parts()) {
        const auto r = rho(row);
        entries.insert(entries.end(), r.begin(), r.end());
        odd_rows += row % 2;
    }
    if (rank < 0 || entries.size() > static_cast<std::size_t>(rank)) {
        throw Error(ErrorCode::RankTooSmall, to_string(p) + " needs rank at least " +
                                                 std::to_string(entries.size()));
    }
    const auto zeros = static_cast<std::size_t>(rank) - entries.size();
    if (is_type(p, Family::C) && 2 * rank == p.size() &&
        zeros != static_cast<std::size_t>(odd_rows / 2)) {
        throw std::logic_error("zero padding disagrees with half the odd rows for " + to_string(p));
    }
    entries.resize(static_cast<std::size_t>(rank), HalfInt{});
    return InfChar(std::move(entries));
}

bool is_metaplectic_integral(const InfChar& c) {
    return std::all_of(c.entries().begin(), c.entries().end(),
                       [](HalfInt h) { return !h.is_integral(); });
}

InfChar theta_lift_character(const InfChar& c, int a) {
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "lift parameter must be nonnegative");
    std::vector<HalfInt> entries(c.entries().begin(), c.entries().end());
    for (int k = 0; k < a; ++k) entries.push_back(HalfInt::from_twice(2 * k + 1));
    return InfChar(std::move(entries));
}

Partition RowPairing::rows() const {
    std::vector<int> parts;
    for (int a : distinct_even) {
        if (a > 0) parts.push_back(a);
    }
    for (int b : paired) {
        parts.push_back(b);
        parts.push_back(b);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

RowPairing row_pairing(const Partition& p) {
    if (!is_type(p, Family::C)) {
        throw Error(ErrorCode::NotAnOrbit, to_string(p) + " is not a type C orbit");
    }
    std::map<int, int, std::greater<>> multiplicity;
    for (int row : p.parts()) ++multiplicity[row];

    RowPairing out;
    for (const auto& [row, count] : multiplicity) {
        if (count % 2 == 1) {
            if (row % 2 == 1) {
                throw Error(ErrorCode::PairingImpossible, "odd row " + std::to_string(row) +
                                                              " occurs an odd number of times");
            }
            out.distinct_even.push_back(row);
        }
        out.paired.insert(out.paired.end(), static_cast<std::size_t>(count / 2), row);
    }
    std::reverse(out.distinct_even.begin(), out.distinct_even.end());
    if (out.distinct_even.size() % 2 == 1) out.distinct_even.insert(out.distinct_even.begin(), 0);

    const auto& a = out.distinct_even;
    for (std::size_t i = a.size(); i >= 2; i -= 2) {
        out.core_columns.push_back(a[i - 1] - 1);
        out.core_columns.push_back(a[i - 2] + 1);
    }
    return out;
}

UnipotentAttachment unipotent_attachment(const Partition& p) {
    if (!is_type(p, Family::C)) {
        throw Error(ErrorCode::NotAnOrbit, to_string(p) + " is not a type C orbit");
    }
    return {infinitesimal_character(p, p.size() / 2), md_BV(p)};
}

}  // namespace nilorb
