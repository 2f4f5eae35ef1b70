#include "nilorb/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

void validate(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw Error(ErrorCode::InvalidPartition, "parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
        }
    }
}

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_columns(std::span<const int> columns) {
    std::vector<int> cols(columns.begin(), columns.end());
    validate(cols);
    return transpose(Partition(std::move(cols)));
}

int Partition::multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<int> Partition::columns() const {
    std::vector<int> cols(static_cast<std::size_t>(first_row()), 0);
    for (int part : parts_) {
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return cols;
}

Partition transpose(const Partition& p) { return Partition(p.columns()); }

Partition grow(const Partition& p) {
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    if (parts.empty()) {
        parts.push_back(1);
    } else {
        ++parts.front();
    }
    return Partition(std::move(parts));
}

Partition shrink(const Partition& p) {
    if (p.empty()) throw Error(ErrorCode::EmptyDiagram, "cannot remove a box from the empty diagram");
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    if (--parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition strip_first_column(const Partition& p) {
    std::vector<int> parts;
    parts.reserve(p.length());
    for (int part : p.parts()) {
        if (part > 1) parts.push_back(part - 1);
    }
    return Partition(std::move(parts));
}

Partition strip_first_row(const Partition& p) {
    if (p.empty()) return p;
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Partition prepend_row(const Partition& p, int len) {
    if (len < 1 || len < p.first_row()) {
        throw Error(ErrorCode::RowTooShort,
                    "row of length " + std::to_string(len) + " shorter than first row " +
                        std::to_string(p.first_row()));
    }
    std::vector<int> parts;
    parts.reserve(p.length() + 1);
    parts.push_back(len);
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    return Partition(std::move(parts));
}

Partition prepend_column(const Partition& p, int len) {
    if (len < 1 || len < p.first_column()) {
        throw Error(ErrorCode::ColumnTooShort,
                    "column of length " + std::to_string(len) + " shorter than first column " +
                        std::to_string(p.first_column()));
    }
    std::vector<int> parts(static_cast<std::size_t>(len), 1);
    for (std::size_t i = 0; i < p.length(); ++i) parts[i] += p[i];
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) {
        throw Error(ErrorCode::SizeMismatch, "dominance compares diagrams of equal size, got " +
                                                 to_string(p) + " and " + to_string(q));
    }
    int lhs = 0;
    int rhs = 0;
    const std::size_t len = std::max(p.length(), q.length());
    for (std::size_t k = 0; k < len; ++k) {
        lhs += k < p.length() ? p[k] : 0;
        rhs += k < q.length() ? q[k] : 0;
        if (lhs > rhs) return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative size");
    if (n > bound) {
        throw Error(ErrorCode::BoundExceeded,
                    "size " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(n, n, prefix, out);
    return out;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
    if (trimmed == "-") return Partition{};
    if (trimmed.empty()) throw Error(ErrorCode::ParseError, "empty partition text (use \"-\")");

    std::vector<int> parts;
    while (true) {
        const auto comma = trimmed.find(',');
        auto token = trimmed.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw Error(ErrorCode::ParseError, "bad partition part '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        trimmed.remove_prefix(comma + 1);
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error&) {
        throw Error(ErrorCode::ParseError, std::string(text) + " is not a partition");
    }
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

}  // namespace nilorb
