#include "nilorb/collapse.hpp"

#include <vector>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

void check_family(const Partition& p, Family f) {
    if (f == Family::A) {
        throw Error(ErrorCode::UnsupportedFamily, "collapse is defined for types B, C and D");
    }
    if (!size_parity_ok(p.size(), f)) {
        throw Error(ErrorCode::ParityMismatch, "cannot take the " + std::string(1, to_char(f)) +
                                                   "-collapse of " + to_string(p));
    }
}

// Index of the last occurrence of the largest part with the given parity and
// odd multiplicity, or -1.
int find_bad_run_end(const std::vector<int>& parts, int bad_parity) {
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == bad_parity && (j - i) % 2 == 1) return static_cast<int>(j - 1);
        i = j;
    }
    return -1;
}

}  // namespace

Partition collapse(const Partition& p, Family f) {
    check_family(p, f);
    const int bad_parity = f == Family::C ? 1 : 0;
    std::vector<int> parts(p.parts().begin(), p.parts().end());

    for (int last = find_bad_run_end(parts, bad_parity); last >= 0;
         last = find_bad_run_end(parts, bad_parity)) {
        const int q = parts[static_cast<std::size_t>(last)];
        --parts[static_cast<std::size_t>(last)];
        std::size_t j = static_cast<std::size_t>(last) + 1;
        while (j < parts.size() && parts[j] >= q - 1) ++j;
        if (j == parts.size()) {
            parts.push_back(1);
        } else {
            ++parts[j];
        }
        if (parts[static_cast<std::size_t>(last)] == 0) {
            parts.erase(parts.begin() + last);
        }
    }
    return Partition(std::move(parts));
}

Partition collapse_oracle(const Partition& p, Family f, int bound) {
    check_family(p, f);
    if (p.size() > bound) {
        throw Error(ErrorCode::BoundExceeded, "oracle bound " + std::to_string(bound) +
                                                  " exceeded by size " + std::to_string(p.size()));
    }
    std::vector<Partition> below;
    for (auto& q : enumerate_partitions(p.size(), bound)) {
        if (is_type(q, f) && dominance_leq(q, p)) below.push_back(std::move(q));
    }
    for (const auto& candidate : below) {
        bool is_max = true;
        for (const auto& other : below) {
            if (!dominance_leq(other, candidate)) {
                is_max = false;
                break;
            }
        }
        if (is_max) return candidate;
    }
    throw Error(ErrorCode::NoMaximum, "no " + std::string(1, to_char(f)) +
                                          "-type maximum below " + to_string(p));
}

}  // namespace nilorb
