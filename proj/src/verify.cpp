#include "nilorb/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <set>
#include <thread>

#include "nilorb/characters.hpp"
#include "nilorb/collapse.hpp"
#include "nilorb/duality.hpp"
#include "nilorb/error.hpp"
#include "nilorb/orbit_types.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct UnitResult {
    long long instances = 0;
    long long failures = 0;
    std::vector<Witness> witnesses;
};

// Collects the outcome of one work unit. Witnesses beyond the limit are
// counted but dropped.
class Recorder {
public:
    explicit Recorder(std::size_t limit) : limit_(limit) {}

    void instance() { ++result_.instances; }

    void fail(Fields fields) {
        ++result_.failures;
        if (result_.witnesses.size() < limit_) result_.witnesses.push_back({std::move(fields)});
    }

    // Runs `body`; a thrown library error is itself a failure.
    template <typename Body>
    void guarded(const Fields& context, Body&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            Fields fields = context;
            fields.emplace_back("error", e.what());
            fail(std::move(fields));
        }
    }

    UnitResult take() { return std::move(result_); }

private:
    std::size_t limit_;
    UnitResult result_;
};

using Unit = std::function<void(Recorder&)>;

std::string str(const Partition& p) { return to_string(p); }
std::string str(int v) { return std::to_string(v); }

std::vector<Partition> with_first_row(std::vector<Partition> orbits, int row) {
    std::erase_if(orbits, [row](const Partition& p) { return p.first_row() != row; });
    return orbits;
}

std::vector<Partition> with_first_column(std::vector<Partition> orbits, int column) {
    std::erase_if(orbits, [column](const Partition& p) { return p.first_column() != column; });
    return orbits;
}

// Set-level check that `images` hits every element of `target` exactly once
// (injective == false only checks the image set).
void expect_image_equals(Recorder& rec, const Fields& context, const std::vector<Partition>& images,
                         const std::vector<Partition>& target, bool injective) {
    const std::set<Partition> image_set(images.begin(), images.end());
    const std::set<Partition> target_set(target.begin(), target.end());
    if (injective && image_set.size() != images.size()) {
        Fields f = context;
        f.emplace_back("property", "injective");
        f.emplace_back("detail", str(static_cast<int>(images.size() - image_set.size())) +
                                     " collisions");
        rec.fail(std::move(f));
    }
    for (const auto& t : target_set) {
        if (!image_set.contains(t)) {
            Fields f = context;
            f.emplace_back("property", "surjective");
            f.emplace_back("missing", str(t));
            rec.fail(std::move(f));
        }
    }
    for (const auto& i : image_set) {
        if (!target_set.contains(i)) {
            Fields f = context;
            f.emplace_back("property", "image_in_target");
            f.emplace_back("extra", str(i));
            rec.fail(std::move(f));
        }
    }
}

// Over all ordered pairs x <= y of the domain, images must satisfy
// f(x) <= f(y) (preserving) or f(y) <= f(x) (reversing). Reports the first
// offending partner for each x.
bool order_ok(const std::vector<Partition>& domain, const std::vector<Partition>& images,
              std::size_t i, bool reversing, std::string& partner) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
        if (!dominance_leq(domain[i], domain[j])) continue;
        const bool ok = reversing ? dominance_leq(images[j], images[i])
                                  : dominance_leq(images[i], images[j]);
        if (!ok) {
            partner = str(domain[j]);
            return false;
        }
    }
    return true;
}

// The diagram with first row 2a whose other rows are `o`; at a = 0 (only
// reached with n = 0) that is the empty diagram.
Partition with_row(const Partition& o, int a) { return a == 0 ? o : prepend_row(o, 2 * a); }

Family langlands_target(Family f) {
    return f == Family::B ? Family::C : f == Family::C ? Family::B : Family::D;
}

int langlands_target_size(Family f, int size) {
    return f == Family::B ? size - 1 : f == Family::C ? size + 1 : size;
}

// ---------------------------------------------------------------------------

void check_md_ls(Recorder& rec, int n) {
    const Fields ctx{{"n", str(n)}};
    const auto domain = enumerate_orbits(Family::C, 2 * n, OrbitFilter::All);
    const auto target = enumerate_orbits(Family::D, 2 * n, OrbitFilter::Special);
    std::vector<Partition> images;
    for (const auto& p : domain) images.push_back(md_LS(p));
    for (std::size_t i = 0; i < domain.size(); ++i) {
        rec.instance();
        std::string partner;
        if (!is_type(images[i], Family::D) || !is_special(images[i], Family::D)) {
            rec.fail({{"n", str(n)}, {"partition", str(domain[i])}, {"property", "well_defined"},
                      {"image", str(images[i])}});
        } else if (!order_ok(domain, images, i, true, partner)) {
            rec.fail({{"n", str(n)}, {"partition", str(domain[i])}, {"property", "order_reversing"},
                      {"partner", partner}});
        }
    }
    expect_image_equals(rec, ctx, images, target, false);
}

void check_md_sp(Recorder& rec, int n) {
    const Fields ctx{{"n", str(n)}};
    const auto domain = enumerate_orbits(Family::D, 2 * n, OrbitFilter::Special);
    const auto target = enumerate_orbits(Family::C, 2 * n, OrbitFilter::MetaplecticSpecial);
    std::vector<Partition> images;
    for (const auto& p : domain) images.push_back(md_SP(p));
    for (std::size_t i = 0; i < domain.size(); ++i) {
        rec.instance();
        std::string partner;
        if (!is_type(images[i], Family::C) || !is_metaplectic_special(images[i])) {
            rec.fail({{"n", str(n)}, {"partition", str(domain[i])}, {"property", "well_defined"},
                      {"image", str(images[i])}});
        } else if (!order_ok(domain, images, i, false, partner)) {
            rec.fail({{"n", str(n)}, {"partition", str(domain[i])}, {"property", "order_preserving"},
                      {"partner", partner}});
        }
    }
    expect_image_equals(rec, ctx, images, target, true);
}

void check_ls_square(Recorder& rec, int n, int a) {
    const Fields ctx{{"n", str(n)}, {"a", str(a)}};
    const auto domain =
        with_first_row(enumerate_orbits(Family::C, 2 * n + 2 * a, OrbitFilter::All), 2 * a);
    std::vector<Partition> stripped;
    for (const auto& o : domain) {
        rec.instance();
        rec.guarded(ctx, [&] {
            const auto left = collapse(transpose(o), Family::C);
            const auto top = strip_first_row(o);
            stripped.push_back(top);
            const auto right = md_LS(top);
            if (left.first_column() != 2 * a) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", "first_column"}, {"got", str(left)}});
            } else if (strip_first_column(left) != right) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", "commutes"}, {"left", str(strip_first_column(left))},
                          {"right", str(right)}});
            }
        });
    }
    expect_image_equals(rec, ctx, stripped, enumerate_orbits(Family::C, 2 * n, OrbitFilter::All),
                        true);
}

void check_first_column_forced(Recorder& rec, int n, int a) {
    for (const auto& d : enumerate_partitions(2 * n + 2 * a, kVerifyEnumerationBound)) {
        rec.instance();
        const auto dc = collapse(d, Family::C);
        if (dc.first_column() == 2 * a && d.first_column() != 2 * a) {
            rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(d)}, {"collapse", str(dc)}});
        }
    }
}

void check_same_b_collapse(Recorder& rec, int n, int a) {
    const int size = 2 * n + 2 * a + 1;
    for (const auto& d2 : enumerate_partitions(size, kVerifyEnumerationBound)) {
        const auto inner = strip_first_column(d2);
        if (inner.empty()) continue;
        const auto target = shrink(inner);
        const int column = size - target.size();
        if (column % 2 == 0) continue;
        const auto d1 = prepend_column(target, column);
        rec.instance();
        if (collapse(d1, Family::B) != collapse(d2, Family::B)) {
            rec.fail({{"n", str(n)}, {"a", str(a)}, {"d1", str(d1)}, {"d2", str(d2)}});
        }
    }
}

void check_sp_square(Recorder& rec, int n, int a) {
    const Fields ctx{{"n", str(n)}, {"a", str(a)}};
    const auto domain =
        with_first_column(enumerate_orbits(Family::C, 2 * n + 2 * a, OrbitFilter::All), 2 * a);
    for (const auto& o : domain) {
        rec.instance();
        rec.guarded(ctx, [&] {
            const auto left = collapse(grow(o), Family::B);
            const auto inner = strip_first_column(o);
            if (!is_type(inner, Family::D)) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", "strip_is_type_D"}, {"got", str(inner)}});
                return;
            }
            const auto right = collapse(shrink(grow(inner)), Family::C);
            if (left.first_column() != 2 * a + 1) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", "first_column"}, {"got", str(left)}});
            } else if (strip_first_column(left) != right) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", "commutes"}, {"left", str(strip_first_column(left))},
                          {"right", str(right)}});
            }
        });
    }
}

void check_sp_column_bijection(Recorder& rec, int n, int a) {
    const Fields ctx{{"n", str(n)}, {"a", str(a)}};
    const auto domain = with_first_column(
        enumerate_orbits(Family::C, 2 * n + 2 * a, OrbitFilter::Special), 2 * a);
    const auto target = with_first_column(
        enumerate_orbits(Family::B, 2 * n + 2 * a + 1, OrbitFilter::Special), 2 * a + 1);
    std::vector<Partition> images;
    for (const auto& o : domain) {
        rec.instance();
        images.push_back(d_SP(o, Family::C));
    }
    expect_image_equals(rec, ctx, images, target, true);
}

void check_bv_square(Recorder& rec, int n, int a) {
    const Fields ctx{{"n", str(n)}, {"a", str(a)}};
    const auto pair = DualPair::langlands(Family::C, 2 * n + 2 * a);
    for (const auto& o : enumerate_orbits(Family::C, 2 * n, OrbitFilter::All)) {
        rec.instance();
        rec.guarded(ctx, [&] {
            const auto bv = d_BV(with_row(o, a), pair);
            const auto mbv = md_BV(o);
            if (!is_type(bv, Family::B) || !is_special(bv, Family::B) ||
                bv.first_column() != 2 * a + 1) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", "lands_in_special_c1"}, {"got", str(bv)}});
            } else if (strip_first_column(bv) != mbv || bv != theta_lift_orbit(mbv, a)) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", "commutes"}, {"left", str(strip_first_column(bv))},
                          {"right", str(mbv)}});
            }
        });
    }
}

void check_ls_image(Recorder& rec, Family f, int size) {
    const Fields ctx{{"family", std::string(1, to_char(f))}, {"size", str(size)}};
    const auto domain = enumerate_orbits(f, size, OrbitFilter::All);
    std::vector<Partition> images;
    for (const auto& p : domain) images.push_back(d_LS(p, f));
    for (std::size_t i = 0; i < domain.size(); ++i) {
        rec.instance();
        std::string partner;
        if (!order_ok(domain, images, i, true, partner)) {
            Fields fl = ctx;
            fl.insert(fl.end(), {{"partition", str(domain[i])}, {"property", "order_reversing"},
                                 {"partner", partner}});
            rec.fail(std::move(fl));
        }
    }
    expect_image_equals(rec, ctx, images, enumerate_orbits(f, size, OrbitFilter::Special), false);
}

void check_sp_bijection(Recorder& rec, Family f, int size) {
    const Fields ctx{{"family", std::string(1, to_char(f))}, {"size", str(size)}};
    const auto domain = enumerate_orbits(f, size, OrbitFilter::Special);
    const auto target = enumerate_orbits(langlands_target(f), langlands_target_size(f, size),
                                         OrbitFilter::Special);
    std::vector<Partition> images;
    for (const auto& p : domain) images.push_back(d_SP(p, f));
    for (std::size_t i = 0; i < domain.size(); ++i) {
        rec.instance();
        std::string partner;
        if (!order_ok(domain, images, i, false, partner)) {
            Fields fl = ctx;
            fl.insert(fl.end(), {{"partition", str(domain[i])}, {"property", "order_preserving"},
                                 {"partner", partner}});
            rec.fail(std::move(fl));
        }
    }
    expect_image_equals(rec, ctx, images, target, true);
}

void check_collapse_laws(Recorder& rec, Family f, int size) {
    const auto all = enumerate_partitions(size, kVerifyEnumerationBound);
    std::vector<Partition> collapsed;
    collapsed.reserve(all.size());
    for (const auto& p : all) collapsed.push_back(collapse(p, f));
    const std::string family(1, to_char(f));

    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& p = all[i];
        const auto& c = collapsed[i];
        rec.instance();
        const Fields ctx{{"family", family}, {"partition", str(p)}};
        rec.guarded(ctx, [&] {
            std::string property;
            const auto oracle = collapse_oracle(p, f);
            if (c != oracle) {
                property = "oracle:" + str(oracle);
            } else if (!is_type(c, f) || !dominance_leq(c, p)) {
                property = "typed_and_below";
            } else if (collapse(c, f) != c) {
                property = "idempotent";
            } else if (is_type(p, f) != (c == p)) {
                property = "fixed_point";
            } else {
                for (std::size_t j = 0; j < all.size() && property.empty(); ++j) {
                    if (dominance_leq(p, all[j]) && !dominance_leq(c, collapsed[j])) {
                        property = "monotone:" + str(all[j]);
                    }
                }
            }
            if (!property.empty()) {
                rec.fail({{"family", family}, {"partition", str(p)}, {"collapse", str(c)},
                          {"property", property}});
            }
        });
    }
}

std::vector<HalfInt> paired_row_entries(int b) {
    auto entries = rho(b);
    const auto copy = entries;
    entries.insert(entries.end(), copy.begin(), copy.end());
    if (b % 2 == 1) entries.push_back(HalfInt{});
    return entries;
}

void check_character_lift(Recorder& rec, int n, int a) {
    const Fields ctx{{"n", str(n)}, {"a", str(a)}};
    for (const auto& o : enumerate_orbits(Family::C, 2 * n, OrbitFilter::All)) {
        rec.instance();
        rec.guarded(ctx, [&] {
            const auto chi = infinitesimal_character(o, n);
            const auto lifted = infinitesimal_character(with_row(o, a), n + a);
            const auto appended = theta_lift_character(chi, a);
            const auto pairing = row_pairing(o);

            // Character of the distinct-even core plus the paired rows, which is
            // how the character splits along the induction from the Levi.
            std::vector<HalfInt> split;
            int core_rank = 0;
            for (int row : pairing.distinct_even) {
                const auto r = rho(row);
                split.insert(split.end(), r.begin(), r.end());
                core_rank += row / 2;
            }
            for (int b : pairing.paired) {
                const auto e = paired_row_entries(b);
                split.insert(split.end(), e.begin(), e.end());
            }
            const auto core = pairing.core();

            std::string property;
            if (lifted != appended) {
                property = "lift_identity";
            } else if (is_metaplectic_integral(chi) && !is_metaplectic_integral(appended)) {
                property = "lift_keeps_metaplectic_integral";
            } else if (pairing.rows() != o) {
                property = "pairing_reconstructs";
            } else if (!is_type(core, Family::C) || core.size() != 2 * core_rank) {
                property = "pairing_core";
            } else if (InfChar(split) != chi) {
                property = "pairing_character";
            }
            if (!property.empty()) {
                rec.fail({{"n", str(n)}, {"a", str(a)}, {"partition", str(o)},
                          {"property", property}, {"lifted", to_string(lifted)},
                          {"appended", to_string(appended)}});
            }
        });
    }
}

void check_md_bv_range(Recorder& rec, int n) {
    for (const auto& o : enumerate_orbits(Family::C, 2 * n, OrbitFilter::All)) {
        rec.instance();
        const auto att = unipotent_attachment(o);
        if (!is_type(att.orbit, Family::C) || !is_metaplectic_special(att.orbit) ||
            att.orbit != md_BV(o) || att.character != infinitesimal_character(o, n)) {
            rec.fail({{"n", str(n)}, {"partition", str(o)}, {"image", str(att.orbit)}});
        }
    }
}

void check_examples(Recorder& rec, int n) {
    std::vector<int> minimal(static_cast<std::size_t>(2 * n - 1), 1);
    minimal.front() = 2;
    const Partition principal{2 * n};
    const Partition zero(std::vector<int>(static_cast<std::size_t>(2 * n), 1));

    rec.instance();
    if (const auto got = md_BV(principal); got != Partition(minimal)) {
        rec.fail({{"n", str(n)}, {"partition", str(principal)}, {"got", str(got)},
                  {"expected", str(Partition(minimal))}});
    }
    rec.instance();
    if (const auto got = md_BV(zero); got != principal) {
        rec.fail({{"n", str(n)}, {"partition", str(zero)}, {"got", str(got)},
                  {"expected", str(principal)}});
    }
}

// ---------------------------------------------------------------------------

struct PlannedUnit {
    int size;  // size of the diagrams the unit quantifies over
    Unit run;
};

struct Plan {
    int largest_size = 0;  // largest diagram the check enumerates
    int bound = kVerifyEnumerationBound;
    std::vector<PlannedUnit> units;
};

void for_n_a(const CheckParams& params, Plan& plan, void (*body)(Recorder&, int, int)) {
    for (int n = 0; n <= params.max_n; ++n) {
        for (int a = n; a <= n + params.a_offset; ++a) {
            plan.units.push_back({2 * n + 2 * a, [=](Recorder& rec) { body(rec, n, a); }});
        }
    }
}

void for_n(int first, const CheckParams& params, Plan& plan, void (*body)(Recorder&, int)) {
    for (int n = first; n <= params.max_n; ++n) {
        plan.units.push_back({2 * n, [=](Recorder& rec) { body(rec, n); }});
    }
}

Plan plan_for(CheckId id, const CheckParams& params) {
    Plan plan;
    const int n = params.max_n;
    const int a = params.max_n + params.a_offset;
    switch (id) {
        case CheckId::C1:
            plan.largest_size = 2 * n;
            for_n(0, params, plan, check_md_ls);
            break;
        case CheckId::C2:
            plan.largest_size = 2 * n;
            for_n(0, params, plan, check_md_sp);
            break;
        case CheckId::C3:
            plan.largest_size = 2 * n + 2 * a;
            for_n_a(params, plan, check_ls_square);
            break;
        case CheckId::C4:
            plan.largest_size = 2 * n + 2 * a;
            for_n_a(params, plan, check_first_column_forced);
            break;
        case CheckId::C5:
            plan.largest_size = 2 * n + 2 * a + 1;
            for_n_a(params, plan, check_same_b_collapse);
            break;
        case CheckId::C6:
            plan.largest_size = 2 * n + 2 * a;
            for_n_a(params, plan, check_sp_square);
            break;
        case CheckId::C7:
            plan.largest_size = 2 * n + 2 * a + 1;
            for_n_a(params, plan, check_sp_column_bijection);
            break;
        case CheckId::C8:
            plan.largest_size = 2 * n;
            for_n_a(params, plan, check_bv_square);
            break;
        case CheckId::C9:
        case CheckId::C10: {
            plan.largest_size = 2 * n + 1;
            const bool image = id == CheckId::C9;
            for (int k = 0; k <= n; ++k) {
                for (Family f : {Family::B, Family::C, Family::D}) {
                    const int size = f == Family::B ? 2 * k + 1 : 2 * k;
                    plan.units.push_back({size, [=](Recorder& rec) {
                                              image ? check_ls_image(rec, f, size)
                                                    : check_sp_bijection(rec, f, size);
                                          }});
                }
            }
            break;
        }
        case CheckId::C11:
            plan.largest_size = 2 * n;
            plan.bound = kDefaultOracleBound;
            for (int size = 0; size <= 2 * n; ++size) {
                for (Family f : {Family::B, Family::C, Family::D}) {
                    if (!size_parity_ok(size, f)) continue;
                    plan.units.push_back(
                        {size, [=](Recorder& rec) { check_collapse_laws(rec, f, size); }});
                }
            }
            break;
        case CheckId::C12:
            plan.largest_size = 2 * n;
            for_n_a(params, plan, check_character_lift);
            break;
        case CheckId::C13:
            plan.largest_size = 2 * n;
            for_n(0, params, plan, check_md_bv_range);
            break;
        case CheckId::C14:
            for_n(1, params, plan, check_examples);
            break;
    }
    std::stable_sort(plan.units.begin(), plan.units.end(),
                     [](const PlannedUnit& x, const PlannedUnit& y) { return x.size < y.size; });
    return plan;
}

constexpr std::array kAllChecks{CheckId::C1,  CheckId::C2,  CheckId::C3,  CheckId::C4,
                                CheckId::C5,  CheckId::C6,  CheckId::C7,  CheckId::C8,
                                CheckId::C9,  CheckId::C10, CheckId::C11, CheckId::C12,
                                CheckId::C13, CheckId::C14};

}  // namespace

std::string_view to_string(CheckId id) {
    static constexpr std::array<std::string_view, 14> names{
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14"};
    return names[static_cast<std::size_t>(id) - 1];
}

std::optional<CheckId> parse_check_id(std::string_view text) {
    for (CheckId id : kAllChecks) {
        if (to_string(id) == text) return id;
    }
    return std::nullopt;
}

std::span<const CheckId> all_checks() { return kAllChecks; }

std::string_view describe(CheckId id) {
    switch (id) {
        case CheckId::C1: return "md_LS well-defined, onto special D-orbits, order reversing";
        case CheckId::C2: return "md_SP order-preserving bijection onto metaplectic special orbits";
        case CheckId::C3: return "LS square: strip column after C-collapse = md_LS after strip row";
        case CheckId::C4: return "c1 of the C-collapse equal to 2a forces c1 = 2a";
        case CheckId::C5: return "odd first column with matching strips gives equal B-collapses";
        case CheckId::C6: return "SP square: strip column after B-collapse(d^+) commutes";
        case CheckId::C7: return "B-collapse(d^+) bijects the c1-constrained special sets";
        case CheckId::C8: return "strip column o d_BV o prepend_row(2a) = md_BV";
        case CheckId::C9: return "d_LS image is the special orbits; order reversing";
        case CheckId::C10: return "d_SP order-preserving bijection of special orbits";
        case CheckId::C11: return "collapse equals oracle; idempotent and monotone";
        case CheckId::C12: return "character of prepend_row(O,2a) equals lifted character";
        case CheckId::C13: return "md_BV lands in metaplectic special orbits";
        case CheckId::C14: return "md_BV of principal and zero orbits";
    }
    return "";
}

std::span<const std::string_view> operations_touched(CheckId id) {
    using sv = std::string_view;
    static constexpr std::array<sv, 3> c1{"md_LS", "is_special", "dominance_leq"};
    static constexpr std::array<sv, 3> c2{"md_SP", "is_metaplectic_special", "dominance_leq"};
    static constexpr std::array<sv, 5> c3{"collapse", "transpose", "strip_first_row",
                                          "strip_first_column", "md_LS"};
    static constexpr std::array<sv, 1> c4{"collapse"};
    static constexpr std::array<sv, 4> c5{"collapse", "strip_first_column", "shrink",
                                          "prepend_column"};
    static constexpr std::array<sv, 4> c6{"collapse", "grow", "shrink", "strip_first_column"};
    static constexpr std::array<sv, 2> c7{"d_SP", "collapse"};
    static constexpr std::array<sv, 5> c8{"d_BV", "md_BV", "prepend_row", "strip_first_column",
                                          "theta_lift_orbit"};
    static constexpr std::array<sv, 2> c9{"d_LS", "dominance_leq"};
    static constexpr std::array<sv, 2> c10{"d_SP", "dominance_leq"};
    static constexpr std::array<sv, 2> c11{"collapse", "collapse_oracle"};
    static constexpr std::array<sv, 6> c12{"rho", "infinitesimal_character", "theta_lift_character",
                                           "is_metaplectic_integral", "row_pairing", "prepend_row"};
    static constexpr std::array<sv, 3> c13{"unipotent_attachment", "md_BV",
                                           "infinitesimal_character"};
    static constexpr std::array<sv, 1> c14{"md_BV"};
    switch (id) {
        case CheckId::C1: return c1;
        case CheckId::C2: return c2;
        case CheckId::C3: return c3;
        case CheckId::C4: return c4;
        case CheckId::C5: return c5;
        case CheckId::C6: return c6;
        case CheckId::C7: return c7;
        case CheckId::C8: return c8;
        case CheckId::C9: return c9;
        case CheckId::C10: return c10;
        case CheckId::C11: return c11;
        case CheckId::C12: return c12;
        case CheckId::C13: return c13;
        case CheckId::C14: return c14;
    }
    return {};
}

CheckReport run_check(CheckId id, const CheckParams& params, const RunOptions& options) {
    if (params.max_n < 1) throw Error(ErrorCode::InvalidArgument, "max_n must be positive");
    if (params.a_offset < 0) throw Error(ErrorCode::InvalidArgument, "a_offset must be nonnegative");
    if (options.jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be positive");

    const auto start = std::chrono::steady_clock::now();
    auto plan = plan_for(id, params);
    if (plan.largest_size > plan.bound) {
        throw Error(ErrorCode::BoundExceeded,
                    std::string(to_string(id)) + " needs diagrams of size " +
                        std::to_string(plan.largest_size) + ", above the bound " +
                        std::to_string(plan.bound));
    }

    std::vector<UnitResult> results(plan.units.size());
    auto run_unit = [&](std::size_t i) {
        Recorder rec(options.witness_limit);
        rec.guarded({{"unit", std::to_string(i)}}, [&] { plan.units[i].run(rec); });
        results[i] = rec.take();
    };

    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options.jobs),
                                               plan.units.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < plan.units.size(); ++i) run_unit(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < plan.units.size(); i = next++) run_unit(i);
            });
        }
    }

    // Units are ordered by increasing size, so the first witnesses kept are
    // the smallest counterexamples.
    CheckReport report;
    report.id = id;
    report.params = params;
    for (auto& r : results) {
        report.instances += r.instances;
        report.failures += r.failures;
        for (auto& w : r.witnesses) {
            if (report.witnesses.size() < options.witness_limit) report.witnesses.push_back(std::move(w));
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace nilorb
