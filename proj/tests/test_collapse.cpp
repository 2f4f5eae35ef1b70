#include <doctest.h>

#include "nilorb/collapse.hpp"
#include "nilorb/error.hpp"
#include "oracle.hpp"

using namespace nilorb;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an nilorb::Error");
    return ErrorCode::InvalidArgument;
}

oracle::Rows rows(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

constexpr Family kClassical[] = {Family::B, Family::C, Family::D};

}  // namespace

TEST_CASE("collapse examples") {
    CHECK(collapse(Partition{3, 1}, Family::C) == Partition{2, 2});
    CHECK(collapse(Partition{4, 1}, Family::B) == Partition{3, 1, 1});
    CHECK(collapse(Partition{3, 1}, Family::D) == Partition{3, 1});
    CHECK(collapse(Partition{4}, Family::D) == Partition{3, 1});
    CHECK(collapse(Partition{}, Family::C) == Partition{});

    CHECK(collapse_oracle(Partition{3, 1}, Family::C) == Partition{2, 2});
    CHECK(collapse_oracle(Partition{2, 2, 1}, Family::B) == Partition{2, 2, 1});
    CHECK(collapse_oracle(Partition{4}, Family::D) == Partition{3, 1});
}

TEST_CASE("collapse errors") {
    CHECK(code_of([] { collapse(Partition{3}, Family::C); }) == ErrorCode::ParityMismatch);
    CHECK(code_of([] { collapse(Partition{4}, Family::B); }) == ErrorCode::ParityMismatch);
    CHECK(code_of([] { collapse(Partition{4}, Family::A); }) == ErrorCode::UnsupportedFamily);
    CHECK(code_of([] { collapse_oracle(Partition{3}, Family::D); }) == ErrorCode::ParityMismatch);
    CHECK(code_of([] { collapse_oracle(Partition{20}, Family::C); }) == ErrorCode::BoundExceeded);
    CHECK(code_of([] { collapse_oracle(Partition{10}, Family::C, 8); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("collapse equals the brute-force maximum") {
    // Independent oracle: enumerate compositions, filter by type and dominance.
    for (int n = 0; n <= 16; ++n) {
        for (const auto& q : oracle::partitions(n)) {
            const Partition p(q);
            for (Family f : kClassical) {
                if (!size_parity_ok(n, f)) continue;
                const auto expected = oracle::collapse(q, to_char(f));
                REQUIRE(expected.has_value());
                const Partition got = collapse(p, f);
                REQUIRE(rows(got) == *expected);
                REQUIRE(collapse_oracle(p, f) == got);
                REQUIRE(got.size() == p.size());
                REQUIRE(collapse(got, f) == got);
                REQUIRE((got == p) == oracle::is_type(q, to_char(f)));
            }
        }
    }
}

TEST_CASE("collapse is monotone") {
    for (int n = 0; n <= 14; ++n) {
        const auto ps = oracle::partitions(n);
        for (Family f : kClassical) {
            if (!size_parity_ok(n, f)) continue;
            std::vector<oracle::Rows> images;
            for (const auto& q : ps) images.push_back(rows(collapse(Partition(q), f)));
            int violations = 0;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                for (std::size_t j = 0; j < ps.size(); ++j) {
                    if (oracle::leq(ps[i], ps[j]) && !oracle::leq(images[i], images[j])) ++violations;
                }
            }
            CHECK_MESSAGE(violations == 0, "size " << n << " family " << to_char(f));
        }
    }
}
