#include "nilorb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

#include "nilorb/characters.hpp"
#include "nilorb/collapse.hpp"
#include "nilorb/duality.hpp"
#include "nilorb/error.hpp"
#include "nilorb/orbit_types.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/report.hpp"
#include "nilorb/verify.hpp"

namespace nilorb {

namespace {

using json = nlohmann::ordered_json;

Family family_arg(const std::string& text) {
    if (auto f = parse_family(text)) return *f;
    throw Error(ErrorCode::ParseError, "unknown family '" + text + "' (expected A, B, C or D)");
}

OrbitFilter filter_arg(const std::string& text) {
    if (auto f = parse_filter(text)) return *f;
    throw Error(ErrorCode::ParseError, "unknown filter '" + text + "'");
}

std::string family_str(Family f) { return std::string(1, to_char(f)); }

json entries_json(const InfChar& c) {
    json out = json::array();
    for (HalfInt h : c.entries()) out.push_back(to_string(h));
    return out;
}

std::string join(const std::vector<int>& values) {
    if (values.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string dot_quote(const Partition& p) { return "\"" + to_string(p) + "\""; }

struct Options {
    std::string format = "text";

    // orbits / poset / collapse / dual
    std::string family;
    int size = 0;
    std::string filter = "all";
    std::string map;
    std::vector<std::string> dual_args;
    std::string partition;

    // char / lift
    int rank = 0;
    int a = 0;
    std::string entries;

    // verify
    int max_rank = 6;
    int a_offset = 3;
    std::vector<std::string> checks;
    int jobs = 1;
};

void emit(std::ostream& out, const Options& opt, const std::string& text, const json& doc) {
    if (opt.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        out << text << '\n';
    }
}

void run_orbits(const Options& opt, std::ostream& out) {
    const auto family = family_arg(opt.family);
    const auto filter = filter_arg(opt.filter);
    const auto orbits = enumerate_orbits(family, opt.size, filter);
    if (opt.format == "json") {
        json list = json::array();
        for (const auto& p : orbits) list.push_back(to_string(p));
        out << json{{"family", family_str(family)},
                    {"size", opt.size},
                    {"filter", std::string(to_string(filter))},
                    {"orbits", std::move(list)}}
                   .dump(2)
            << '\n';
        return;
    }
    for (const auto& p : orbits) out << p << '\n';
}

void run_dual(const Options& opt, std::ostream& out) {
    const bool metaplectic = opt.map == "mls" || opt.map == "msp" || opt.map == "mbv";
    const std::size_t expected = metaplectic ? 1 : 2;
    if (opt.dual_args.size() != expected) {
        throw CLI::ValidationError("dual", metaplectic ? "expects one partition"
                                                       : "expects a family and a partition");
    }
    const auto input = parse_partition(opt.dual_args.back());
    json doc{{"map", opt.map}, {"input", to_string(input)}};
    Partition result;
    if (metaplectic) {
        doc["family"] = "C";
        result = opt.map == "mls" ? md_LS(input) : opt.map == "msp" ? md_SP(input) : md_BV(input);
    } else {
        const auto family = family_arg(opt.dual_args.front());
        doc["family"] = family_str(family);
        if (opt.map == "dls") {
            result = d_LS(input, family);
        } else if (opt.map == "dsp") {
            result = d_SP(input, family);
        } else {
            const auto pair = DualPair::langlands(family, input.size());
            doc["target"] = family_str(pair.target().family);
            result = d_BV(input, pair);
        }
    }
    doc["output"] = to_string(result);
    emit(out, opt, to_string(result), doc);
}

void run_collapse(const Options& opt, std::ostream& out) {
    const auto family = family_arg(opt.family);
    const auto input = parse_partition(opt.partition);
    const auto result = collapse(input, family);
    emit(out, opt, to_string(result),
         json{{"family", family_str(family)}, {"input", to_string(input)}, {"output", to_string(result)}});
}

void run_char(const Options& opt, std::ostream& out) {
    const auto input = parse_partition(opt.partition);
    const auto c = infinitesimal_character(input, opt.rank);
    emit(out, opt, to_string(c),
         json{{"partition", to_string(input)},
              {"rank", opt.rank},
              {"entries", entries_json(c)},
              {"metaplectic_integral", is_metaplectic_integral(c)}});
}

void run_lift_orbit(const Options& opt, std::ostream& out) {
    const auto input = parse_partition(opt.partition);
    const auto result = theta_lift_orbit(input, opt.a);
    emit(out, opt, to_string(result),
         json{{"input", to_string(input)}, {"a", opt.a}, {"output", to_string(result)}});
}

void run_lift_char(const Options& opt, std::ostream& out) {
    const auto input = parse_infchar(opt.entries);
    const auto result = theta_lift_character(input, opt.a);
    emit(out, opt, to_string(result),
         json{{"input", entries_json(input)}, {"a", opt.a}, {"output", entries_json(result)}});
}

void run_pairing(const Options& opt, std::ostream& out) {
    const auto input = parse_partition(opt.partition);
    const auto rp = row_pairing(input);
    const std::string text = "distinct_even: " + join(rp.distinct_even) +
                             "\npaired: " + join(rp.paired) +
                             "\ncore_columns: " + join(rp.core_columns) +
                             "\ncore: " + to_string(rp.core());
    emit(out, opt, text,
         json{{"partition", to_string(input)},
              {"distinct_even", rp.distinct_even},
              {"paired", rp.paired},
              {"core_columns", rp.core_columns},
              {"core", to_string(rp.core())}});
}

void run_attach(const Options& opt, std::ostream& out) {
    const auto input = parse_partition(opt.partition);
    const auto att = unipotent_attachment(input);
    emit(out, opt,
         "character: " + to_string(att.character) + "\norbit: " + to_string(att.orbit),
         json{{"partition", to_string(input)},
              {"character", entries_json(att.character)},
              {"orbit", to_string(att.orbit)}});
}

int run_verify(const Options& opt, std::ostream& out) {
    std::vector<CheckId> ids;
    if (opt.checks.empty()) {
        ids.assign(all_checks().begin(), all_checks().end());
    } else {
        for (const auto& name : opt.checks) {
            const auto id = parse_check_id(name);
            if (!id) throw Error(ErrorCode::UnknownCheck, "unknown check '" + name + "'");
            ids.push_back(*id);
        }
    }

    const CheckParams params{opt.max_rank, opt.a_offset};
    const RunOptions run{opt.jobs, 10};
    std::vector<CheckReport> reports;
    for (CheckId id : ids) reports.push_back(run_check(id, params, run));

    const auto failed = std::count_if(reports.begin(), reports.end(),
                                      [](const CheckReport& r) { return !r.passed(); });
    if (opt.format == "json") {
        json list = json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        out << list.dump(2) << '\n';
    } else {
        out << "check  instances  failures  status  elapsed_ms  statement\n";
        for (const auto& r : reports) {
            std::string line(to_string(r.id));
            line.resize(7, ' ');
            std::string count = std::to_string(r.instances);
            count.resize(11, ' ');
            std::string failures = std::to_string(r.failures);
            failures.resize(10, ' ');
            std::string elapsed = std::to_string(r.elapsed.count());
            elapsed.resize(12, ' ');
            out << line << count << failures << (r.passed() ? "PASS    " : "FAIL    ") << elapsed
                << describe(r.id) << '\n';
            for (const auto& w : r.witnesses) {
                out << "    witness:";
                for (const auto& [k, v] : w.fields) out << ' ' << k << '=' << v;
                out << '\n';
            }
        }
        out << (reports.size() - static_cast<std::size_t>(failed)) << '/' << reports.size()
            << " checks passed (max_n=" << params.max_n << ", a_offset=" << params.a_offset
            << ")\n";
    }
    return failed > 0 ? kExitCheckFailed : kExitOk;
}

void run_poset(const Options& opt, std::ostream& out) {
    const auto family = family_arg(opt.family);
    const auto filter = filter_arg(opt.filter);
    const auto orbits = enumerate_orbits(family, opt.size, filter);
    const auto edges = hasse_edges(orbits);
    if (opt.format == "dot") {
        out << "digraph poset {\n";
        for (const auto& p : orbits) out << "  " << dot_quote(p) << " [label=" << dot_quote(p) << "];\n";
        for (const auto& [lo, hi] : edges) out << "  " << dot_quote(lo) << " -> " << dot_quote(hi) << ";\n";
        out << "}\n";
        return;
    }
    json nodes = json::array();
    for (const auto& p : orbits) nodes.push_back(to_string(p));
    json edge_list = json::array();
    for (const auto& [lo, hi] : edges) edge_list.push_back({to_string(lo), to_string(hi)});
    out << json{{"family", family_str(family)},
                {"size", opt.size},
                {"filter", std::string(to_string(filter))},
                {"nodes", std::move(nodes)},
                {"edges", std::move(edge_list)}}
               .dump(2)
        << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nilpotent orbit combinatorics: collapses, dualities, characters and checks",
                 "nilorb"};
    app.require_subcommand(1);
    Options opt;
    const std::vector<std::string> text_json{"text", "json"};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember(text_json));
    };

    auto* orbits = app.add_subcommand("orbits", "list the orbits of a family and size");
    orbits->add_option("family", opt.family)->required();
    orbits->add_option("size", opt.size)->required()->check(CLI::NonNegativeNumber);
    orbits->add_option("--filter", opt.filter, "all, sp or ms");
    add_format(orbits);

    auto* dual = app.add_subcommand("dual", "apply a duality map");
    dual->add_option("map", opt.map)
        ->required()
        ->check(CLI::IsMember({"dls", "dsp", "dbv", "mls", "msp", "mbv"}));
    dual->add_option("args", opt.dual_args, "[family] partition")->required();
    add_format(dual);

    auto* coll = app.add_subcommand("collapse", "B-, C- or D-collapse of a partition");
    coll->add_option("family", opt.family)->required();
    coll->add_option("partition", opt.partition)->required();
    add_format(coll);

    auto* chr = app.add_subcommand("char", "infinitesimal character of a diagram");
    chr->add_option("partition", opt.partition)->required();
    chr->add_option("--rank", opt.rank)->required()->check(CLI::NonNegativeNumber);
    add_format(chr);

    auto* lift = app.add_subcommand("lift", "stable-range lift of an orbit or character");
    lift->require_subcommand(1);
    auto* lift_orbit = lift->add_subcommand("orbit", "prepend a column of length 2a+1");
    lift_orbit->add_option("partition", opt.partition)->required();
    lift_orbit->add_option("--a", opt.a)->required()->check(CLI::NonNegativeNumber);
    add_format(lift_orbit);
    auto* lift_char = lift->add_subcommand("char", "append 1/2, ..., (2a-1)/2");
    lift_char->add_option("entries", opt.entries)->required();
    lift_char->add_option("--a", opt.a)->required()->check(CLI::NonNegativeNumber);
    add_format(lift_char);

    auto* pairing = app.add_subcommand("pairing", "row pairing of a type C diagram");
    pairing->add_option("partition", opt.partition)->required();
    add_format(pairing);

    auto* attach = app.add_subcommand("attach", "character and orbit attached to a type C orbit");
    attach->add_option("partition", opt.partition)->required();
    add_format(attach);

    auto* verify = app.add_subcommand("verify", "run the exhaustive checks");
    verify->add_option("--max-rank", opt.max_rank)->check(CLI::PositiveNumber);
    verify->add_option("--a-offset", opt.a_offset)->check(CLI::NonNegativeNumber);
    verify->add_option("--check", opt.checks, "C1..C14; repeatable");
    verify->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);
    add_format(verify);

    auto* poset = app.add_subcommand("poset", "Hasse diagram of dominance on an orbit set");
    poset->add_option("family", opt.family)->required();
    poset->add_option("size", opt.size)->required()->check(CLI::NonNegativeNumber);
    poset->add_option("--filter", opt.filter, "all, sp or ms");
    poset->add_option("--format", opt.format, "dot or json")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (orbits->parsed()) run_orbits(opt, out);
        else if (dual->parsed()) run_dual(opt, out);
        else if (coll->parsed()) run_collapse(opt, out);
        else if (chr->parsed()) run_char(opt, out);
        else if (lift_orbit->parsed()) run_lift_orbit(opt, out);
        else if (lift_char->parsed()) run_lift_char(opt, out);
        else if (pairing->parsed()) run_pairing(opt, out);
        else if (attach->parsed()) run_attach(opt, out);
        else if (verify->parsed()) return run_verify(opt, out);
        else if (poset->parsed()) run_poset(opt, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace nilorb
