// regrep: command-line front end for the regrep library.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 resource guard.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "regrep/cayley.hpp"
#include "regrep/errors.hpp"
#include "regrep/groups.hpp"
#include "regrep/kernels.hpp"
#include "regrep/molien.hpp"
#include "regrep/numtheory.hpp"

using namespace regrep;
using nlohmann::json;

namespace {

struct Options {
    bool json_out = false;
    bool timing = false;
    int threads = 0;
    std::string group;
    std::string profile;
    std::string variant = "plain";
    std::string alg;
    std::string which = "all";
    std::int64_t n = -1, m = -1, p = -1, i = 0, l = -1;
    std::int64_t degree = -1;
    int order = 10;
    std::int64_t max_order = 6;
    std::int64_t max_total = 10;
    std::size_t sample = 0;
    std::uint64_t seed = 0x5eed;
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO); }

std::string paint(const std::string& s, bool ok) {
    if (!use_color()) return s;
    return (ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

// Wall times differ between runs; they are only shown with --timing.
void strip_elapsed(json& j) {
    if (j.is_object()) {
        j.erase("elapsed");
        for (auto& [k, v] : j.items()) strip_elapsed(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_elapsed(v);
    }
}

void emit_json(json j, const Options& o) {
    if (!o.timing) strip_elapsed(j);
    std::cout << j.dump(2) << "\n";
}

FiniteAbelianGroup require_group(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    return parse_group(o.group);
}

std::int64_t require_cyclic(const Options& o) {
    const auto g = require_group(o);
    if (!g.is_single_cyclic()) throw UsageError("this command needs a cyclic group C<n>");
    return g.order();
}

std::int64_t require(std::int64_t v, const char* flag) {
    if (v < 0) throw UsageError(std::string(flag) + " is required (non-negative)");
    return v;
}

OrderProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read profile file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("profile file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_order_profile(j);
}

std::vector<FiniteAbelianGroup> groups_for(const Options& o) {
    if (!o.group.empty()) return {parse_group(o.group)};
    return abelian_groups_up_to(o.max_order);
}

// Human form of a report: one status line plus indented failures.
void print_report(const Report& r, const Options& o) {
    std::string params;
    for (auto& [k, v] : r.parameters.items()) params += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    std::cout << paint(r.passed() ? "PASS" : "FAIL", r.passed()) << "  " << r.check << params;
    if (o.timing) std::printf("  (%.3fs)", r.elapsed);
    std::cout << "\n";
    for (auto f : r.failures) {
        strip_elapsed(f);
        std::cout << "      " << f.dump() << "\n";
    }
}

int finish_reports(const std::vector<Report>& reports, const Options& o) {
    bool ok = true;
    for (auto& r : reports) ok = ok && r.passed();
    if (o.json_out) {
        json arr = json::array();
        for (auto& r : reports) arr.push_back(r.to_json());
        emit_json(reports.size() == 1 ? arr[0] : arr, o);
    } else {
        for (auto& r : reports) print_report(r, o);
        if (reports.size() > 1) {
            std::size_t passed = 0;
            for (auto& r : reports) passed += r.passed();
            std::cout << passed << "/" << reports.size() << " checks passed\n";
        }
    }
    return ok ? 0 : 1;
}

void print_value(const std::string& label, const json& j, const std::string& human, const Options& o) {
    if (o.json_out)
        emit_json(j, o);
    else
        std::cout << (label.empty() ? "" : label + " = ") << human << "\n";
}

int run_dim(const std::string& kind, const Options& o) {
    const std::int64_t n = require_cyclic(o);
    const std::int64_t m = require(o.m, "--m");
    BigInt v;
    json j = {{"n", n}, {"m", m}, {"i", o.i}};
    if (kind == "a") {
        v = molien::a_coeff(n, m, o.i);
    } else if (kind == "b") {
        v = molien::b_coeff(n, m, o.i);
    } else {
        const std::int64_t p = require(o.p, "--p");
        j["p"] = p;
        v = molien::dim_sym_wedge(n, p, m, o.i);
    }
    j["quantity"] = kind;
    j["value"] = v.get_str();
    print_value("", j, v.get_str(), o);
    return 0;
}

int run_series(const std::string& kind, const Options& o) {
    if (o.order < 0) throw UsageError("--order must be non-negative");
    if (!o.profile.empty()) {
        if (kind == "bigraded") throw UsageError("bigraded series need a cyclic --group");
        const auto profile = load_profile(o.profile);
        const auto s = kind == "sym" ? molien::sym_series(profile, o.order) : molien::ext_series(profile, o.order);
        print_value("", {{"series", kind}, {"order", o.order}, {"coefficients", s.to_json()}}, s.to_string(), o);
        return 0;
    }
    if (kind == "bigraded") {
        const std::int64_t n = require_cyclic(o);
        const auto s = molien::bigraded_series(n, o.i, o.order, o.order);
        if (o.json_out) {
            emit_json({{"series", kind}, {"n", n}, {"i", o.i}, {"order", o.order}, {"coefficients", s.to_json()}}, o);
        } else {
            // Rows indexed by the exterior degree m, columns by symmetric degree p.
            for (int mm = 0; mm <= o.order; ++mm) std::cout << "m=" << mm << ": " << s.row_t(mm).to_string("s") << "\n";
        }
        return 0;
    }
    const auto g = require_group(o);
    const auto s = kind == "sym" ? molien::sym_series(g, o.i, o.order) : molien::ext_series(g, o.i, o.order);
    print_value("",
                {{"series", kind}, {"group", g.name()}, {"i", o.i}, {"order", o.order}, {"coefficients", s.to_json()}},
                s.to_string(), o);
    return 0;
}

int run_cayley(const std::string& kind, const Options& o) {
    const auto g = require_group(o);
    const auto variant = cayley::parse_variant(o.variant);
    std::optional<std::size_t> l;
    if (o.l >= 0) l = static_cast<std::size_t>(o.l);
    if (kind == "table") {
        const auto t = cayley::build(g, variant, l);
        if (o.json_out)
            emit_json(t.to_json(), o);
        else
            std::cout << t.to_string();
        return 0;
    }
    if (kind == "per" || kind == "det") {
        const auto t = cayley::build(g, variant, l);
        IntPolynomial poly(g.size());
        std::string alg;
        if (kind == "per") {
            const auto a = cayley::parse_permanent_algorithm(o.alg.empty() ? "ryser" : o.alg);
            alg = a == cayley::PermanentAlgorithm::ryser ? "ryser" : "leibniz";
            poly = cayley::permanent(t, a);
        } else {
            const auto a = cayley::parse_determinant_algorithm(o.alg.empty() ? "leibniz" : o.alg);
            alg = a == cayley::DeterminantAlgorithm::leibniz ? "leibniz" : "factored";
            poly = cayley::determinant(g, t, a);
        }
        print_value("",
                    {{"group", g.name()},
                     {"variant", cayley::variant_name(variant)},
                     {"size", t.size()},
                     {"function", kind},
                     {"algorithm", alg},
                     {"monomials", poly.size()},
                     {"polynomial", to_json(poly)}},
                    to_string(poly), o);
        return 0;
    }
    if (kind == "support") {
        const std::size_t degree = o.degree >= 0 ? static_cast<std::size_t>(o.degree) : g.size();
        const auto support = cayley::hall_support(g, degree);
        if (o.json_out) {
            emit_json({{"group", g.name()}, {"degree", degree}, {"count", support.size()}, {"monomials", support}}, o);
        } else {
            for (auto& mono : support) {
                IntPolynomial single(g.size());
                single.add_term(mono, BigInt(1));
                std::cout << to_string(single) << "\n";
            }
            std::cout << support.size() << " monomials\n";
        }
        return 0;
    }
    // counts
    const auto p = cayley::p_count(g);
    const auto d = cayley::d_count(g);
    const auto zero_sums = molien::n_g(g);
    if (o.json_out) {
        emit_json({{"group", g.name()},
                   {"order", g.order()},
                   {"p", p.get_str()},
                   {"d", d.get_str()},
                   {"n_g", zero_sums.get_str()}},
                  o);
    } else {
        std::printf("group  %s\norder  %lld\np      %s\nd      %s\nn_g    %s\n", g.name().c_str(),
                    static_cast<long long>(g.order()), p.get_str().c_str(), d.get_str().c_str(),
                    zero_sums.get_str().c_str());
    }
    return 0;
}

std::vector<std::pair<std::int64_t, std::int64_t>> conjecture_grid() {
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
    for (std::int64_t l = 2; l <= 9; ++l) grid.emplace_back(2, l);
    for (std::int64_t l = 3; l <= 8; ++l) grid.emplace_back(3, l);
    for (std::int64_t l = 4; l <= 7; ++l) grid.emplace_back(4, l);
    return grid;
}

std::vector<Report> identity_reports(const Options& o, bool use_defaults) {
    std::vector<molien::Identity> ids;
    if (o.which == "all")
        ids = {molien::Identity::A, molien::Identity::B, molien::Identity::log2var, molien::Identity::log3var};
    else
        ids = {molien::parse_identity(o.which)};
    std::vector<Report> out;
    for (auto id : ids) {
        int order = use_defaults ? (id == molien::Identity::log3var ? 8 : 20) : o.order;
        out.push_back(molien::check_identity(id, order));
    }
    return out;
}

std::vector<Report> action_reports(const Options& o) {
    std::vector<Report> out;
    for (auto& g : groups_for(o)) {
        std::size_t sample = o.sample;
        if (sample == 0 && g.size() > 6) sample = 500;
        out.push_back(cayley::check_action_identities(g, sample, o.seed));
    }
    return out;
}

int run_check(const std::string& kind, const Options& o) {
    std::vector<Report> reports;
    if (kind == "reciprocity") {
        reports.push_back(molien::check_reciprocity(o.max_total));
        reports.push_back(molien::check_fredman(o.max_total + 6));
    } else if (kind == "identity") {
        reports = identity_reports(o, false);
    } else if (kind == "hall") {
        for (auto& g : groups_for(o)) reports.push_back(cayley::check_hall(g, g.size() <= 5));
    } else if (kind == "invariance") {
        for (auto& g : groups_for(o)) reports.push_back(cayley::check_invariance(g));
    } else if (kind == "actions") {
        reports = action_reports(o);
    } else if (kind == "lehmer") {
        if (o.p >= 0)
            reports.push_back(cayley::lehmer_check(o.p));
        else
            for (std::int64_t p : {3, 5, 7}) reports.push_back(cayley::lehmer_check(p));
    } else if (kind == "extended") {
        for (auto& g : groups_for(o)) reports.push_back(cayley::check_block_and_extended_counts(g));
    } else if (kind == "conjecture") {
        if (o.n >= 0 || o.l >= 0) {
            const std::int64_t n = require(o.n, "--n");
            reports.push_back(cayley::check_conjecture(n, o.l >= 0 ? o.l : n));
        } else {
            for (auto [n, l] : conjecture_grid()) {
                reports.push_back(cayley::check_conjecture(n, l));
                if (!reports.back().passed()) break;
            }
        }
    } else {  // all
        Options sub = o;
        sub.group.clear();
        reports.push_back(molien::check_reciprocity(10));
        reports.push_back(molien::check_fredman(16));
        for (auto& r : identity_reports(sub, true)) reports.push_back(std::move(r));
        for (auto& g : abelian_groups_up_to(o.max_order)) {
            reports.push_back(cayley::check_hall(g, g.size() <= 5));
            reports.push_back(cayley::check_invariance(g));
            reports.push_back(cayley::check_block_and_extended_counts(g));
        }
        for (auto& r : action_reports(sub)) reports.push_back(std::move(r));
        for (std::int64_t p : {3, 5, 7}) reports.push_back(cayley::lehmer_check(p));
    }
    return finish_reports(reports, o);
}

int run_oracle(const std::string& kind, const Options& o) {
    if (kind == "subsets") {
        const auto g = require_group(o);
        const auto v = subset_sum_zero_count(g);
        print_value("", {{"group", g.name()}, {"zero_sum_subsets", v.get_str()}}, v.get_str(), o);
        return 0;
    }
    const std::int64_t n = o.group.empty() ? require(o.n, "--n") : require_cyclic(o);
    const std::int64_t m = require(o.m, "--m");
    BigInt v;
    json j = {{"n", n}, {"m", m}, {"i", o.i}, {"oracle", kind}};
    if (kind == "a") {
        v = molien::a_bruteforce(n, m, o.i);
    } else {
        const std::int64_t p = require(o.p, "--p");
        j["p"] = p;
        v = molien::dim_bruteforce(n, p, m, o.i);
    }
    j["value"] = v.get_str();
    print_value("", j, v.get_str(), o);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regrep: invariants of regular representations of finite abelian groups"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_out, "Emit JSON instead of text");
    app.add_flag("--timing", o.timing, "Include wall-clock timings");
    app.add_option("--threads", o.threads, "Maximum worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

    std::string leaf;
    auto add_group = [&](CLI::App* parent, const std::string& verb, const std::vector<std::string>& kinds) {
        auto* sub = parent->add_subcommand(verb);
        sub->require_subcommand(1, 1);
        sub->fallthrough();
        std::vector<CLI::App*> leaves;
        for (auto& k : kinds) {
            auto* c = sub->add_subcommand(k);
            c->fallthrough();
            c->callback([&leaf, k] { leaf = k; });
            leaves.push_back(c);
        }
        return std::pair{sub, leaves};
    };

    auto [dim, dim_leaves] = add_group(&app, "dim", {"a", "b", "sw"});
    dim->description("Isotypic dimensions of cyclic groups");
    for (auto* c : dim_leaves) {
        c->add_option("--group", o.group, "Cyclic group, e.g. C6")->required();
        c->add_option("--m", o.m, "Degree m");
        c->add_option("--i", o.i, "Character index i");
        c->add_option("--p", o.p, "Symmetric degree p (sw only)");
    }

    auto [series, series_leaves] = add_group(&app, "series", {"sym", "ext", "bigraded"});
    series->description("Poincare series of isotypic components");
    for (auto* c : series_leaves) {
        auto* grp = c->add_option("--group", o.group, "Group spec, e.g. C2xC4");
        auto* prof = c->add_option("--profile", o.profile, "Order profile JSON file (invariants only)");
        grp->excludes(prof);
        c->add_option("--i", o.i, "Character index");
        c->add_option("--order", o.order, "Truncation order N");
    }

    auto [cay, cay_leaves] = add_group(&app, "cayley", {"table", "per", "det", "support", "counts"});
    cay->description("Cayley tables and their permanents and determinants");
    for (auto* c : cay_leaves) {
        c->add_option("--group", o.group, "Group spec")->required();
        c->add_option("--variant", o.variant, "plain, hat, extended, block2n or toeplitz");
        c->add_option("--l", o.l, "Toeplitz size l >= n");
        c->add_option("--alg", o.alg, "per: ryser|leibniz; det: leibniz|factored");
        c->add_option("--degree", o.degree, "Degree for support (default n)");
    }

    auto [chk, chk_leaves] = add_group(&app, "check", {"reciprocity", "identity", "hall", "invariance", "actions",
                                                       "lehmer", "extended", "conjecture", "all"});
    chk->description("Verification sweeps");
    for (auto* c : chk_leaves) {
        c->add_option("--group", o.group, "Single group instead of all groups up to --max-order");
        c->add_option("--max-order", o.max_order, "Largest group order swept");
        c->add_option("--max-total", o.max_total, "Reciprocity bound on n + m");
        c->add_option("--which", o.which, "Identity: A, B, log2var, log3var or all");
        c->add_option("--order", o.order, "Series order for identities");
        c->add_option("--sample", o.sample, "Random permutations (0 = exhaustive)");
        c->add_option("--seed", o.seed, "Sampling seed");
        c->add_option("--p", o.p, "Prime for lehmer");
        c->add_option("--n", o.n, "Cyclic order for conjecture");
        c->add_option("--l", o.l, "Table size for conjecture");
    }

    auto [orc, orc_leaves] = add_group(&app, "oracle", {"a", "dims", "subsets"});
    orc->description("Brute-force reference values");
    for (auto* c : orc_leaves) {
        c->add_option("--group", o.group, "Group spec");
        c->add_option("--n", o.n, "Cyclic order n");
        c->add_option("--m", o.m, "Degree m");
        c->add_option("--p", o.p, "Symmetric degree p");
        c->add_option("--i", o.i, "Character index");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o.threads > 0) kernels::set_max_threads(o.threads);
        if (dim->parsed()) return run_dim(leaf, o);
        if (series->parsed()) return run_series(leaf, o);
        if (cay->parsed()) return run_cayley(leaf, o);
        if (chk->parsed()) return run_check(leaf, o);
        return run_oracle(leaf, o);
    } catch (const GuardError& e) {
        std::cerr << "regrep: resource guard '" << e.guard() << "' tripped: requested " << e.requested()
                  << ", limit " << e.limit() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "regrep: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "regrep: internal error: " << e.what() << "\n";
        return 1;
    }
}
