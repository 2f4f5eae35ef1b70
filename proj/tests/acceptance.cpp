// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "nilorb/cli.hpp"
#include "nilorb/duality.hpp"
#include "nilorb/orbit_types.hpp"
#include "nilorb/verify.hpp"
#include "oracle.hpp"

using namespace nilorb;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Runs the checks and folds them into one outcome.
Outcome checks(std::initializer_list<CheckId> ids, CheckParams params) {
    Outcome o;
    std::ostringstream detail;
    for (CheckId id : ids) {
        const auto r = run_check(id, params, {4, 10});
        if (detail.tellp() > 0) detail << "; ";
        detail << to_string(id) << ": " << r.instances << " instances, " << r.failures << " failures";
        if (!r.passed() || r.instances == 0) o.ok = false;
    }
    o.detail = detail.str();
    return o;
}

Outcome minimal_and_principal() {
    Outcome o;
    for (int n = 1; n <= 10; ++n) {
        std::vector<int> minimal{2};
        minimal.resize(static_cast<std::size_t>(2 * n - 1), 1);
        const Partition zero(std::vector<int>(static_cast<std::size_t>(2 * n), 1));
        if (md_BV(Partition{2 * n}) != Partition(minimal) || md_BV(zero) != Partition{2 * n}) {
            o.ok = false;
            o.detail += "n=" + std::to_string(n) + " ";
        }
    }
    if (o.ok) o.detail = "n = 1..10";
    return o;
}

Outcome counting_fixtures() {
    // Golden values, derived by the independent oracle and frozen.
    constexpr std::array<std::size_t, 4> golden{4, 3, 3, 3};
    std::array<std::size_t, 4> derived{};
    for (const auto& q : oracle::partitions(4)) {
        if (oracle::is_type(q, 'C')) {
            ++derived[0];
            if (oracle::is_special(q, 'C')) ++derived[1];
            if (oracle::is_metaplectic_special(q)) ++derived[2];
        }
        if (oracle::is_type(q, 'D') && oracle::is_special(q, 'D')) ++derived[3];
    }
    const std::array<std::size_t, 4> ours{
        enumerate_orbits(Family::C, 4, OrbitFilter::All).size(),
        enumerate_orbits(Family::C, 4, OrbitFilter::Special).size(),
        enumerate_orbits(Family::C, 4, OrbitFilter::MetaplecticSpecial).size(),
        enumerate_orbits(Family::D, 4, OrbitFilter::Special).size(),
    };
    Outcome o;
    o.ok = ours == golden && derived == golden;
    std::ostringstream d;
    d << "library " << ours[0] << "," << ours[1] << "," << ours[2] << "," << ours[3] << "; oracle " << derived[0]
      << "," << derived[1] << "," << derived[2] << "," << derived[3];
    o.detail = d.str();
    return o;
}

std::pair<int, std::string> run_binary(const std::string& args) {
    const std::string cmd = std::string(NILORB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract() {
    Outcome o;
    const auto orbits = run_binary("orbits C 4 --filter ms");
    const auto dual = run_binary("dual mbv \"4\"");
    const auto full = run_binary("verify --max-rank 6");
    const auto five = run_binary("verify --max-rank 5");
    const bool table = full.second.find("14/14 checks passed") != std::string::npos;
    o.ok = orbits == std::pair<int, std::string>{0, "4\n2,2\n2,1,1\n"} &&
           dual == std::pair<int, std::string>{0, "2,1,1\n"} && full.first == 0 && table && five.first == 0;
    o.detail = "orbits exit " + std::to_string(orbits.first) + ", dual exit " + std::to_string(dual.first) +
               ", verify(6) exit " + std::to_string(full.first) + ", verify(5) exit " + std::to_string(five.first);
    return o;
}

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;  // 0 = no time limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const CheckParams grid{6, 3};
    const std::vector<Criterion> criteria{
        {1, "minimal and principal orbit images, n <= 10", 1, minimal_and_principal},
        {2, "md_LS onto special D-orbits, order reversing, 2n <= 20", 60,
         [] { return checks({CheckId::C1}, {10, 0}); }},
        {3, "md_SP order-preserving bijection, 2n <= 20", 60, [] { return checks({CheckId::C2}, {10, 0}); }},
        {4, "commuting diagrams C3, C6, C8, n <= 6, a in n..n+3", 120,
         [&] { return checks({CheckId::C3, CheckId::C6, CheckId::C8}, grid); }},
        {5, "collapse compatibilities C4, C5, C7 on the same grid", 120,
         [&] { return checks({CheckId::C4, CheckId::C5, CheckId::C7}, grid); }},
        {6, "collapse oracle equivalence, size <= 16", 300, [] { return checks({CheckId::C11}, {8, 0}); }},
        {7, "character lift identity, 2n <= 12, a <= n+3", 30, [&] { return checks({CheckId::C12}, grid); }},
        {8, "counting fixtures at size 4", 0, counting_fixtures},
        {9, "md_BV lands in metaplectic special orbits, size <= 20", 0,
         [] { return checks({CheckId::C13}, {10, 0}); }},
        {10, "CLI contract", 0, cli_contract},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds << "s";
        if (c.limit_seconds > 0) time << " (limit " << static_cast<int>(c.limit_seconds) << "s)";
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " | " << time.str()
                  << " | " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
