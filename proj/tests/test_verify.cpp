#include <doctest.h>

#include <set>
#include <string>

#include "nilorb/error.hpp"
#include "nilorb/report.hpp"
#include "nilorb/verify.hpp"

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

}  // namespace

TEST_CASE("check ids") {
    CHECK(all_checks().size() == 14);
    CHECK(to_string(CheckId::C8) == "C8");
    CHECK(parse_check_id("C14") == CheckId::C14);
    CHECK_FALSE(parse_check_id("C15").has_value());
    CHECK_FALSE(parse_check_id("c1x").has_value());
    for (CheckId id : all_checks()) {
        CHECK_FALSE(describe(id).empty());
        CHECK_FALSE(operations_touched(id).empty());
    }
}

TEST_CASE("documented report values") {
    const auto c14 = run_check(CheckId::C14, {10, 3});
    CHECK(c14.instances == 20);
    CHECK(c14.failures == 0);
    CHECK(c14.witnesses.empty());

    const auto c2 = run_check(CheckId::C2, {2, 3});
    CHECK(c2.instances == 5);  // 1 + 1 + 3 special D-orbits at sizes 0, 2, 4
    CHECK(c2.failures == 0);
}

TEST_CASE("every check passes at a small range") {
    for (CheckId id : all_checks()) {
        const auto r = run_check(id, {4, 2});
        CHECK_MESSAGE(r.passed(), to_string(id));
        CHECK(r.instances > 0);
        CHECK(r.witnesses.empty() == (r.failures == 0));
        CHECK(r.params == CheckParams{4, 2});
    }
}

TEST_CASE("parameter and bound errors") {
    CHECK(code_of([] { run_check(CheckId::C1, {0, 3}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { run_check(CheckId::C1, {3, -1}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { run_check(CheckId::C1, {3, 3}, {0, 10}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { run_check(CheckId::C11, {10, 3}); }) == ErrorCode::BoundExceeded);
    CHECK(code_of([] { run_check(CheckId::C1, {21, 3}); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("reports do not depend on the thread count") {
    for (CheckId id : all_checks()) {
        const auto one = run_check(id, {5, 2}, {1, 10});
        const auto four = run_check(id, {5, 2}, {4, 10});
        CHECK_MESSAGE(to_json(one, false).dump() == to_json(four, false).dump(), to_string(id));
    }
}

TEST_CASE("report JSON shape") {
    const auto r = run_check(CheckId::C14, {3, 3});
    const auto j = to_json(r);
    CHECK(j["check"] == "C14");
    CHECK(j["params"]["max_n"] == 3);
    CHECK(j["params"]["a_offset"] == 3);
    CHECK(j["instances"] == 6);
    CHECK(j["failures"] == 0);
    CHECK(j["witnesses"].is_array());
    CHECK(j.contains("elapsed_ms"));
    CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
}

TEST_CASE("checks cover the library operations") {
    std::set<std::string> touched;
    for (CheckId id : all_checks())
        for (auto op : operations_touched(id)) touched.emplace(op);
    for (const char* op : {"collapse", "collapse_oracle", "d_LS", "d_SP", "d_BV", "md_LS", "md_SP", "md_BV",
                           "theta_lift_orbit", "rho", "infinitesimal_character", "is_metaplectic_integral",
                           "theta_lift_character", "row_pairing", "unipotent_attachment"}) {
        CHECK_MESSAGE(touched.count(op) == 1, op);
    }
}
