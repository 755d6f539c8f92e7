// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Deliberately thin: everything goes through the
// shared-library C API, so this file doubles as a usage example for it.

#include "hurwitznum/hurwitznum.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

struct CtxDeleter {
    void operator()(hn_ctx* c) const { hn_ctx_free(c); }
};

int status_to_exit(hn_status s) {
    switch (s) {
        case HN_OK: return kExitOk;
        case HN_ERR_BUDGET: return kExitBudget;
        case HN_ERR_USAGE: return kExitUsage;
        default: return kExitDomain;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--map", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_warnings(hn_ctx* ctx) {
    char* w = hn_take_warnings(ctx);
    if (w && *w) std::cerr << "warning: " << w << "\n";
    hn_string_free(w);
}

// tabular rendering for --format table; JSON stays the default
void emit(hn_ctx* ctx, const std::string& format, const char* payload) {
    if (format == "table") {
        nlohmann::json j = nlohmann::json::parse(payload);
        if (j.contains("value")) {
            std::cout << j["value"].get<std::string>() << "\n";
            return;
        }
        if (j.contains("entries") && j["entries"].is_object()) {
            for (const auto& [k, v] : j["entries"].items())
                std::cout << k << "\t" << v.get<std::string>() << "\n";
            return;
        }
        if (j.contains("criteria")) {
            for (const auto& c : j["criteria"])
                std::cout << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "\tcriterion "
                          << c["id"].get<int>() << "\t" << c["name"].get<std::string>() << "\n";
            return;
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << payload << "\n";
    print_warnings(ctx);
}

int run(hn_ctx* ctx, const std::string& format, const std::function<hn_status(char**)>& call) {
    char* out = nullptr;
    hn_status s = call(&out);
    if (s != HN_OK) {
        std::cerr << "error: " << hn_last_error(ctx) << "\n";
        hn_string_free(out);
        return status_to_exit(s);
    }
    emit(ctx, format, out);
    hn_string_free(out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hurwitznum: exact Hurwitz numbers of branched coverings, with brute-force "
                 "permutation-tuple and Gaussian matrix-integral oracles"};
    app.require_subcommand(1);

    std::unique_ptr<hn_ctx, CtxDeleter> ctx(hn_ctx_new());

    std::string cache_dir, budget, format = "json";
    int max_weight = -1;
    app.add_option("--cache-dir", cache_dir, "character table cache directory");
    app.add_option("--budget", budget, "enumeration step budget (default 1e8)");
    app.add_option("--max-weight", max_weight, "largest admissible degree d (default 12)");
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    // partitions
    auto* cmd_partitions = app.add_subcommand("partitions", "list partitions of d");
    int p_d = 0;
    cmd_partitions->add_option("--d", p_d, "weight")->required();

    // char-table
    auto* cmd_chartab = app.add_subcommand("char-table", "character table of S_d");
    int ct_d = 0;
    cmd_chartab->add_option("--d", ct_d, "degree")->required();
    cmd_chartab->add_flag("--json", "kept for compatibility; json is the default output");

    // hurwitz
    auto* cmd_hurwitz = app.add_subcommand("hurwitz", "Hurwitz number from the character formula");
    int h_euler = 2, h_d = -1, h_order = 3;
    std::string h_profiles, h_s;
    cmd_hurwitz->add_option("--euler", h_euler, "Euler characteristic of the base")->required();
    cmd_hurwitz->add_option("--profiles", h_profiles, "profiles, e.g. \"[3],[3],[3]\"");
    cmd_hurwitz->add_option("--d", h_d, "degree (needed when no profiles)");
    cmd_hurwitz->add_option("--s", h_s, "deformation: q = s^2, exact rational");
    cmd_hurwitz->add_option("--t-order", h_order, "deformation series order (with --s)");

    // moebius
    auto* cmd_moebius = app.add_subcommand("moebius", "Moebius functional D(Delta)");
    std::string mb_profile;
    cmd_moebius->add_option("--profile", mb_profile, "partition, e.g. \"[2,1]\"")->required();

    // cutjoin
    auto* cmd_cutjoin = app.add_subcommand("cutjoin", "apply the cut-and-join operator");
    std::string cj_apply;
    cmd_cutjoin->add_option("--apply", cj_apply, "monomial \"[2]\" or {\"coeffs\":{...}}")->required();

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force oracles");
    cmd_oracle->require_subcommand(1);
    auto* cmd_tuple = cmd_oracle->add_subcommand("tuple", "permutation-tuple enumeration");
    int t_euler = 2, t_d = -1, t_towers = 0;
    bool t_nonorientable = false;
    std::string t_profiles;
    cmd_tuple->add_option("--euler", t_euler)->required();
    cmd_tuple->add_option("--profiles", t_profiles);
    cmd_tuple->add_option("--d", t_d);
    cmd_tuple->add_flag("--non-orientable", t_nonorientable, "use the cross-cap relator");
    cmd_tuple->add_option("--tally", t_towers, "tally over this many free watchtower slots");
    auto* cmd_wick = cmd_oracle->add_subcommand("wick", "Wick contraction of a map");
    std::string w_map;
    int w_d = 1;
    bool w_check = false;
    cmd_wick->add_option("--map", w_map, "map JSON file")->required();
    cmd_wick->add_option("--d", w_d, "degree")->required();
    cmd_wick->add_flag("--check", w_check, "cross-validate against tuples and the formula");

    // ym
    auto* cmd_ym = app.add_subcommand("ym", "2D Yang-Mills partial sums");
    int ym_euler = 2, ym_n = 2, ym_dmax = 4, ym_rho_order = 3;
    bool ym_numeric = false;
    std::string ym_rho, ym_classes_file;
    cmd_ym->add_option("--euler", ym_euler)->required();
    cmd_ym->add_option("--rho", ym_rho, "coupling (rational in exact mode)");
    cmd_ym->add_option("--N", ym_n)->required();
    cmd_ym->add_option("--dmax", ym_dmax);
    cmd_ym->add_option("--rho-order", ym_rho_order, "series order in exact mode");
    cmd_ym->add_option("--classes", ym_classes_file, "JSON file with Wilson classes");
    cmd_ym->add_flag("--numeric", ym_numeric);

    // tau
    auto* cmd_tau = app.add_subcommand("tau", "tau-series slices");
    cmd_tau->require_subcommand(1);
    auto* cmd_tau_jm = cmd_tau->add_subcommand("jm", "Jucys-Murphy soliton-lattice series");
    std::string tj_kind = "TL";
    int tj_k = 0, tj_order = 2, tj_d = 2;
    cmd_tau_jm->add_option("--kind", tj_kind)->check(CLI::IsMember({"TL", "BKP"}));
    cmd_tau_jm->add_option("--k", tj_k, "lattice shift");
    cmd_tau_jm->add_option("--t-order", tj_order);
    cmd_tau_jm->add_option("--d", tj_d, "weight slice")->required();
    auto* cmd_tau_h = cmd_tau->add_subcommand("hyper", "hypergeometric family");
    std::string th_kind = "TL";
    int th_a = 0, th_n = 2, th_d = 2, th_order = 2;
    cmd_tau_h->add_option("--kind", th_kind)->check(CLI::IsMember({"TL", "BKP"}));
    cmd_tau_h->add_option("--a", th_a);
    cmd_tau_h->add_option("--N", th_n)->required();
    cmd_tau_h->add_option("--d", th_d)->required();
    cmd_tau_h->add_option("--t-order", th_order);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verification suites");
    std::string v_suite;
    int v_d = 4;
    cmd_verify->add_option("suite", v_suite,
                           "orthogonality|idempotency|cuts|cutjoin|tm|oracles|theorem31|tau|"
                           "charmap|ym|schur-expectation|int-tau|twopoint")
        ->required();
    cmd_verify->add_option("--d", v_d, "degree bound");

    // cache
    auto* cmd_cache = app.add_subcommand("cache", "show the cache configuration");

    // selftest
    auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in check batteries");
    std::string st_level = "fast";
    cmd_selftest->add_option("--level", st_level)->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto configure = [&](const char* key, const std::string& value) {
        if (hn_ctx_configure(ctx.get(), key, value.c_str()) != HN_OK) {
            std::cerr << "error: " << hn_last_error(ctx.get()) << "\n";
            return false;
        }
        return true;
    };
    if (!cache_dir.empty() && !configure("cache_dir", cache_dir)) return kExitUsage;
    if (!budget.empty() && !configure("budget", budget)) return kExitUsage;
    if (max_weight >= 0 && !configure("max_weight", std::to_string(max_weight))) return kExitUsage;

    try {
        if (cmd_partitions->parsed())
            return run(ctx.get(), format, [&](char** out) { return hn_partitions(ctx.get(), p_d, out); });
        if (cmd_chartab->parsed())
            return run(ctx.get(), format, [&](char** out) { return hn_char_table(ctx.get(), ct_d, out); });
        if (cmd_hurwitz->parsed()) {
            if (h_s.empty())
                return run(ctx.get(), format, [&](char** out) {
                    return hn_hurwitz(ctx.get(), h_euler, h_profiles.c_str(), h_d, out);
                });
            return run(ctx.get(), format, [&](char** out) {
                return hn_deformed_hurwitz(ctx.get(), h_euler, h_profiles.c_str(), h_s.c_str(),
                                           h_order, out);
            });
        }
        if (cmd_moebius->parsed())
            return run(ctx.get(), format,
                       [&](char** out) { return hn_moebius(ctx.get(), mb_profile.c_str(), out); });
        if (cmd_cutjoin->parsed())
            return run(ctx.get(), format,
                       [&](char** out) { return hn_cutjoin_apply(ctx.get(), cj_apply.c_str(), out); });
        if (cmd_tuple->parsed())
            return run(ctx.get(), format, [&](char** out) {
                return hn_oracle_tuple(ctx.get(), t_euler, t_nonorientable ? 0 : 1,
                                       t_profiles.c_str(), t_d, t_towers, out);
            });
        if (cmd_wick->parsed()) {
            std::string map_text = read_file(w_map);
            return run(ctx.get(), format, [&](char** out) {
                return hn_oracle_wick(ctx.get(), map_text.c_str(), w_d, w_check ? 1 : 0, out);
            });
        }
        if (cmd_ym->parsed()) {
            std::string classes_text;
            if (!ym_classes_file.empty()) classes_text = read_file(ym_classes_file);
            return run(ctx.get(), format, [&](char** out) {
                return hn_ym(ctx.get(), ym_euler, ym_rho.c_str(), ym_n, ym_dmax,
                             classes_text.c_str(), ym_rho_order, ym_numeric ? 1 : 0, out);
            });
        }
        if (cmd_tau_jm->parsed())
            return run(ctx.get(), format, [&](char** out) {
                return hn_tau_jm(ctx.get(), tj_kind.c_str(), tj_k, tj_order, tj_d, out);
            });
        if (cmd_tau_h->parsed())
            return run(ctx.get(), format, [&](char** out) {
                return hn_tau_hypergeometric(ctx.get(), th_kind.c_str(), th_a, th_n, th_d, th_order,
                                             out);
            });
        if (cmd_verify->parsed())
            return run(ctx.get(), format, [&](char** out) {
                return hn_verify(ctx.get(), v_suite.c_str(), v_d, out);
            });
        if (cmd_cache->parsed()) {
            const char* env = std::getenv("HURWITZ_CACHE_DIR");
            nlohmann::json j{{"cache_dir", !cache_dir.empty() ? cache_dir : (env ? env : "")},
                             {"env", env ? env : ""}};
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
        if (cmd_selftest->parsed())
            return run(ctx.get(), format, [&](char** out) {
                return hn_selftest(ctx.get(), st_level.c_str(), out);
            });
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
