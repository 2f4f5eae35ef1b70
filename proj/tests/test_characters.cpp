#include <doctest.h>

#include <algorithm>
#include <map>

#include "nilorb/characters.hpp"
#include "nilorb/error.hpp"
#include "nilorb/orbit_types.hpp"
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

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

InfChar chi(std::vector<int> twice) {
    std::vector<HalfInt> e;
    for (int t : twice) e.push_back(h(t));
    return InfChar(e);
}

// Doubled rho-string of a row, written out directly: a-1, a-3, ... down to 1 or 2.
std::vector<int> twice_rho(int a) {
    std::vector<int> out;
    for (int t = a - 1; t >= 1; t -= 2) out.push_back(t);
    return out;
}

// Independent character: doubled entries of every row, padded with zeros, sorted descending.
std::vector<int> oracle_character(const oracle::Rows& r, int rank) {
    std::vector<int> out;
    for (int a : r) {
        auto s = twice_rho(a);
        out.insert(out.end(), s.begin(), s.end());
    }
    out.resize(static_cast<std::size_t>(rank), 0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<int> twice_entries(const InfChar& c) {
    std::vector<int> out;
    for (HalfInt x : c.entries()) out.push_back(x.twice());
    return out;
}

std::vector<oracle::Rows> type_c(int size) {
    std::vector<oracle::Rows> out;
    for (const auto& q : oracle::partitions_cached(size))
        if (oracle::is_type(q, 'C')) out.push_back(q);
    return out;
}

}  // namespace

TEST_CASE("half-integers") {
    CHECK(to_string(h(3)) == "3/2");
    CHECK(to_string(h(1)) == "1/2");
    CHECK(to_string(h(0)) == "0");
    CHECK(to_string(h(-4)) == "-2");
    CHECK(parse_halfint("3/2") == h(3));
    CHECK(parse_halfint("-1/2") == h(-1));
    CHECK(parse_halfint("2") == HalfInt::integer(2));
    CHECK(code_of([] { parse_halfint("3/4"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_halfint("x"); }) == ErrorCode::ParseError);
    for (int t = -9; t <= 9; ++t) CHECK(parse_halfint(to_string(h(t))) == h(t));
}

TEST_CASE("InfChar canonical form") {
    CHECK(chi({-1, 3}) == chi({3, 1}));
    CHECK(to_string(chi({1, 3})) == "3/2,1/2");
    CHECK(to_string(InfChar{}) == "-");
    CHECK(parse_infchar("1/2,-3/2") == chi({3, 1}));
    CHECK(parse_infchar("-") == InfChar{});
    const InfChar c = chi({-5, 2, 0, 3, -2});
    CHECK(InfChar(std::vector<HalfInt>(c.entries().begin(), c.entries().end())) == c);
    CHECK(twice_entries(c) == std::vector<int>{5, 3, 2, 2, 0});
}

TEST_CASE("rho") {
    CHECK(rho(5) == std::vector<HalfInt>{h(2), h(4)});
    CHECK(rho(4) == std::vector<HalfInt>{h(1), h(3)});
    CHECK(rho(0).empty());
    CHECK(rho(1).empty());
    for (int a = 0; a <= 30; ++a) {
        auto got = rho(a);
        std::vector<int> twice;
        for (HalfInt x : got) twice.push_back(x.twice());
        auto expected = twice_rho(a);
        std::reverse(expected.begin(), expected.end());
        CHECK(twice == expected);
        CHECK(got.size() == static_cast<std::size_t>(a / 2));
    }
}

TEST_CASE("infinitesimal_character examples") {
    CHECK(infinitesimal_character(Partition{4}, 2) == chi({3, 1}));
    CHECK(infinitesimal_character(Partition{1, 1, 1, 1}, 2) == chi({0, 0}));
    CHECK(infinitesimal_character(Partition{2, 1, 1}, 2) == chi({1, 0}));
    CHECK(infinitesimal_character(Partition{4, 2, 2}, 4) == chi({3, 1, 1, 1}));
    CHECK(code_of([] { infinitesimal_character(Partition{4}, 1); }) == ErrorCode::RankTooSmall);
    CHECK(infinitesimal_character(Partition{5}, 3) == chi({4, 2, 0}));  // padding beyond type C
}

TEST_CASE("metaplectic integrality") {
    CHECK(is_metaplectic_integral(chi({3, 1})));
    CHECK_FALSE(is_metaplectic_integral(chi({0, 0})));
    CHECK_FALSE(is_metaplectic_integral(chi({1, 0})));
    CHECK(is_metaplectic_integral(InfChar{}));
}

TEST_CASE("theta_lift_character") {
    CHECK(theta_lift_character(chi({1, 1}), 2) == chi({3, 1, 1, 1}));
    CHECK(theta_lift_character(InfChar{}, 1) == chi({1}));
    CHECK(theta_lift_character(chi({3, 1}), 2) == chi({3, 3, 1, 1}));
    CHECK(theta_lift_character(chi({3, 1}), 0) == chi({3, 1}));
    CHECK(code_of([] { theta_lift_character(InfChar{}, -1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("characters of type-C orbits against the oracle") {
    for (int n = 0; n <= 10; ++n) {
        for (const auto& q : type_c(2 * n)) {
            const Partition p(q);
            const InfChar c = infinitesimal_character(p, n);
            const auto expected = oracle_character(q, n);
            REQUIRE(twice_entries(c) == expected);
            const long long zeros = std::count(expected.begin(), expected.end(), 0);
            const long long odd_rows = std::count_if(q.begin(), q.end(), [](int a) { return a % 2 == 1; });
            REQUIRE(zeros == odd_rows / 2);
            REQUIRE(InfChar(std::vector<HalfInt>(c.entries().begin(), c.entries().end())) == c);
        }
    }
}

TEST_CASE("lift identity for characters") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& q : type_c(2 * n)) {
            const Partition p(q);
            const InfChar base = infinitesimal_character(p, n);
            for (int a = std::max(n, 1); a <= n + 3; ++a) {
                if (2 * a < p.first_row()) continue;
                REQUIRE(infinitesimal_character(prepend_row(p, 2 * a), n + a) == theta_lift_character(base, a));
                REQUIRE(is_metaplectic_integral(theta_lift_character(base, a)) == is_metaplectic_integral(base));
            }
        }
    }
}

TEST_CASE("row_pairing examples") {
    const auto a = row_pairing(Partition{2, 2});
    CHECK(a.distinct_even.empty());
    CHECK(a.paired == std::vector<int>{2});
    CHECK(a.core_columns.empty());

    const auto b = row_pairing(Partition{4, 2, 2});
    CHECK(b.distinct_even == std::vector<int>{0, 4});
    CHECK(b.paired == std::vector<int>{2});
    CHECK(b.core_columns == std::vector<int>{3, 1});

    const auto c = row_pairing(Partition{4});
    CHECK(c.distinct_even == std::vector<int>{0, 4});
    CHECK(c.paired.empty());
    CHECK(c.core_columns == std::vector<int>{3, 1});
    CHECK(c.core() == Partition{2, 1, 1});

    CHECK(row_pairing(Partition{}) == RowPairing{});
    CHECK(code_of([] { row_pairing(Partition{3, 1}); }) == ErrorCode::NotAnOrbit);
}

TEST_CASE("row_pairing reconstruction and core") {
    for (int size = 0; size <= 20; size += 2) {
        for (const auto& q : type_c(size)) {
            const Partition p(q);
            const RowPairing rp = row_pairing(p);
            REQUIRE(rp.rows() == p);
            REQUIRE(rp.distinct_even.size() % 2 == 0);
            REQUIRE(std::is_sorted(rp.distinct_even.begin(), rp.distinct_even.end()));

            // Rebuild the row multiset by hand.
            std::map<int, int> mult;
            for (int x : q) ++mult[x];
            std::vector<int> odd_mult_evens;
            for (auto [part, count] : mult)
                if (part % 2 == 0 && count % 2 == 1) odd_mult_evens.push_back(part);
            std::vector<int> rebuilt;
            for (int x : rp.distinct_even)
                if (x > 0) rebuilt.push_back(x);
            for (int b : rp.paired) rebuilt.insert(rebuilt.end(), 2, b);
            std::sort(rebuilt.begin(), rebuilt.end(), std::greater<>());
            REQUIRE(rebuilt == q);
            std::vector<int> positive;
            for (int x : rp.distinct_even)
                if (x > 0) positive.push_back(x);
            REQUIRE(positive == odd_mult_evens);

            int sum_even = 0, sum_core = 0;
            for (int x : rp.distinct_even) sum_even += x;
            for (int x : rp.core_columns) sum_core += x;
            REQUIRE(sum_core == sum_even);
            if (size <= 16) REQUIRE(oracle::is_type(oracle::transpose(rp.core_columns), 'C'));
        }
    }
}

TEST_CASE("unipotent_attachment") {
    CHECK(unipotent_attachment(Partition{4}) == UnipotentAttachment{chi({3, 1}), Partition{2, 1, 1}});
    CHECK(unipotent_attachment(Partition{1, 1, 1, 1}) == UnipotentAttachment{chi({0, 0}), Partition{4}});
    CHECK(unipotent_attachment(Partition{2, 2}) == UnipotentAttachment{chi({1, 1}), Partition{2, 2}});
    CHECK(code_of([] { unipotent_attachment(Partition{3, 1}); }) == ErrorCode::NotAnOrbit);
}
