// SPDX-License-Identifier: Apache-2.0
#include "hurwitznum/hurwitznum.h"

#include "hn/classalg.hpp"
#include "hn/config.hpp"
#include "hn/engine.hpp"
#include "hn/json_io.hpp"
#include "hn/symfun.hpp"
#include "hn/tuple_oracle.hpp"
#include "hn/verify.hpp"
#include "hn/wick.hpp"
#include "hn/ym.hpp"

#include <json.hpp>

#include <cstring>
#include <functional>
#include <string>
#include <vector>

using nlohmann::json;

struct hn_ctx {
    hn::Config config;
    hn::TableCache tables{"", 12};
    std::string last_error;
    std::vector<std::string> warnings;

    void rebuild_tables() { tables = hn::TableCache(config.cache_dir, config.max_weight); }
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hn_status guard(hn_ctx* ctx, char** out_json, const std::function<json()>& fn) {
    if (!ctx) return HN_ERR_USAGE;
    if (!out_json) {
        ctx->last_error = "null output pointer";
        return HN_ERR_USAGE;
    }
    *out_json = nullptr;
    try {
        json j = fn();
        for (auto& w : ctx->tables.take_warnings()) ctx->warnings.push_back(std::move(w));
        *out_json = dup_string(j.dump());
        return HN_OK;
    } catch (const hn::BudgetError& e) {
        ctx->last_error = e.what();
        return HN_ERR_BUDGET;
    } catch (const hn::DomainError& e) {
        ctx->last_error = e.what();
        return HN_ERR_DOMAIN;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return HN_ERR_INTERNAL;
    }
}

json series_json(const hn::TSeries<hn::Rational>& s, const char* var) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(json{{var, e[0]}, {"value", hn::rat_str(c)}});
    return terms;
}

json laurent_json(const hn::Laurent& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = hn::rat_str(c);
    return j;
}

json tseries_laurent_json(const hn::TSeries<hn::Laurent>& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(json{{"t", e}, {"coeff_s", laurent_json(c)}});
    return terms;
}

std::vector<hn::ClassSpec> parse_classes(const char* classes_json, int N, int dmax) {
    std::vector<hn::ClassSpec> classes;
    if (!classes_json || !*classes_json) return classes;
    json j = json::parse(classes_json);
    for (const auto& e : j) {
        if (e.contains("identity") && e["identity"].get<bool>())
            classes.push_back(hn::ClassSpec::identity(N, dmax));
        else {
            hn::ClassSpec c;
            for (const auto& v : e.at("power_sums")) c.power_sums.push_back(hn::rat_parse(v.get<std::string>()));
            classes.push_back(std::move(c));
        }
    }
    return classes;
}

json results_json(const std::vector<hn::CriterionResult>& results) {
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back(json{{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
    }
    return json{{"pass", all}, {"criteria", arr}};
}

} // namespace

extern "C" {

hn_ctx* hn_ctx_new(void) {
    auto* ctx = new hn_ctx();
    const char* env = std::getenv("HURWITZ_CACHE_DIR");
    if (env && *env) {
        ctx->config.cache_dir = env;
        ctx->rebuild_tables();
    }
    return ctx;
}

void hn_ctx_free(hn_ctx* ctx) { delete ctx; }

hn_status hn_ctx_configure(hn_ctx* ctx, const char* key, const char* value) {
    if (!ctx || !key || !value) return HN_ERR_USAGE;
    try {
        std::string k = key;
        if (k == "cache_dir") {
            ctx->config.cache_dir = value;
        } else if (k == "max_weight") {
            ctx->config.max_weight = std::stoi(value);
        } else if (k == "budget") {
            ctx->config.budget = hn::Integer(value);
        } else if (k == "format") {
            ctx->config.format = value;
        } else {
            ctx->last_error = "unknown configuration key '" + k + "'";
            return HN_ERR_USAGE;
        }
        ctx->config.check();
        ctx->rebuild_tables();
        return HN_OK;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return HN_ERR_DOMAIN;
    }
}

const char* hn_last_error(const hn_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

char* hn_take_warnings(hn_ctx* ctx) {
    if (!ctx) return dup_string("");
    std::string all;
    for (const auto& w : ctx->warnings) {
        if (!all.empty()) all += "\n";
        all += w;
    }
    ctx->warnings.clear();
    return dup_string(all);
}

void hn_string_free(char* s) { delete[] s; }

hn_status hn_partitions(hn_ctx* ctx, int d, char** out_json) {
    return guard(ctx, out_json, [&] {
        if (d < 0) throw hn::DomainError("weight must be nonnegative");
        if (d > ctx->config.max_weight)
            throw hn::DomainError("weight exceeds configured maximum");
        json parts = json::array();
        for (const auto& p : hn::enumerate_partitions(d)) parts.push_back(hn::partition_json(p));
        return json{{"d", d}, {"count", parts.size()}, {"partitions", parts}};
    });
}

hn_status hn_char_table(hn_ctx* ctx, int d, char** out_json) {
    return guard(ctx, out_json, [&] {
        const hn::CharacterTable& t = ctx->tables.get(d);
        json parts = json::array();
        for (const auto& p : t.order()) parts.push_back(hn::partition_json(p));
        return json{{"d", d}, {"partitions", parts}, {"matrix", t.matrix()}};
    });
}

hn_status hn_hurwitz(hn_ctx* ctx, int euler, const char* profiles_json, int d, char** out_json) {
    return guard(ctx, out_json, [&] {
        auto profiles = hn::parse_profiles(profiles_json ? profiles_json : "");
        hn::Rational v = hn::hurwitz(euler, d, profiles, ctx->tables);
        return json{{"value", hn::rat_str(v)}};
    });
}

hn_status hn_moebius(hn_ctx* ctx, const char* profile_json, char** out_json) {
    return guard(ctx, out_json, [&] {
        hn::Partition delta = hn::Partition::parse(profile_json ? profile_json : "");
        if (delta.weight() > ctx->config.max_weight)
            throw hn::DomainError("weight exceeds configured maximum");
        return json{{"value", hn::rat_str(hn::moebius_functional(delta, ctx->tables))}};
    });
}

hn_status hn_deformed_hurwitz(hn_ctx* ctx, int euler, const char* profiles_json, const char* s,
                              int order, char** out_json) {
    return guard(ctx, out_json, [&] {
        auto profiles = hn::parse_profiles(profiles_json ? profiles_json : "");
        hn::Rational sv = hn::rat_parse(s ? s : "");
        auto series = hn::deformed_hurwitz(euler, -1, profiles, sv, order, ctx->tables);
        return json{{"s", hn::rat_str(sv)}, {"order", order}, {"terms", series_json(series, "t")}};
    });
}

hn_status hn_cutjoin_apply(hn_ctx* ctx, const char* poly_json, char** out_json) {
    return guard(ctx, out_json, [&] {
        std::string text = poly_json ? poly_json : "";
        hn::PowerSumPoly f;
        if (!text.empty() && text.find("coeffs") != std::string::npos)
            f = hn::parse_powersum(json::parse(text));
        else
            f = hn::PowerSumPoly::monomial(hn::Partition::parse(text));
        return hn::powersum_json(hn::cut_and_join_apply(f));
    });
}

hn_status hn_oracle_tuple(hn_ctx* ctx, int euler, int orientable, const char* profiles_json, int d,
                          int tally_towers, char** out_json) {
    return guard(ctx, out_json, [&] {
        auto profiles = hn::parse_profiles(profiles_json ? profiles_json : "");
        int degree = d;
        if (degree < 0) {
            if (profiles.empty()) throw hn::DomainError("degree required without profiles");
            degree = profiles.front().weight();
        }
        if (tally_towers > 0) {
            auto tally = hn::tuple_tally(euler, orientable != 0, profiles, tally_towers, degree,
                                         ctx->config.budget);
            return hn::tally_json(tally);
        }
        hn::Rational v = hn::tuple_hurwitz(euler, orientable != 0, profiles, degree, ctx->config.budget);
        return json{{"value", hn::rat_str(v)}};
    });
}

hn_status hn_oracle_wick(hn_ctx* ctx, const char* map_json, int d, int check, char** out_json) {
    return guard(ctx, out_json, [&] {
        hn::CombinatorialMap m = hn::CombinatorialMap::parse(map_json ? map_json : "");
        json j = hn::tally_json(hn::wick_contract(m, d, ctx->config.budget));
        j["euler"] = m.euler();
        j["edges"] = m.edges;
        if (check) {
            hn::Report r = hn::verify_theorem(m, d, ctx->tables, ctx->config.budget);
            j["check"] = json{{"pass", r.pass}, {"detail", r.detail}};
        }
        return j;
    });
}

hn_status hn_ym(hn_ctx* ctx, int euler, const char* rho, int N, int dmax, const char* classes_json,
                int rho_order, int numeric, char** out_json) {
    return guard(ctx, out_json, [&] {
        auto classes = parse_classes(classes_json, N, dmax);
        if (numeric) {
            double rv = rho ? std::stod(rho) : 0.0;
            double v = hn::ym_correlator_numeric(euler, classes, rv, N, dmax, ctx->tables);
            return json{{"mode", "numeric"}, {"value", v}};
        }
        auto series = hn::ym_correlator(euler, classes, N, dmax, rho_order, ctx->tables);
        json j{{"mode", "exact"}, {"N", N}, {"dmax", dmax}, {"rho_order", rho_order}};
        j["terms"] = series_json(series, "rho_pow");
        if (rho && *rho) {
            // convenience: the truncated series evaluated at the given rho
            hn::Rational rv = hn::rat_parse(rho);
            hn::Rational acc = 0;
            hn::Rational pw = 1;
            for (int m = 0; m <= rho_order; ++m) {
                acc += series.coeff({m}) * pw;
                pw *= rv;
            }
            j["value_at_rho"] = hn::rat_str(acc);
        }
        return j;
    });
}

hn_status hn_tau_jm(hn_ctx* ctx, const char* kind, int k, int t_order, int d, char** out_json) {
    return guard(ctx, out_json, [&] {
        std::string kd = kind ? kind : "";
        json entries = json::array();
        if (kd == "TL") {
            for (const auto& [key, series] : hn::tau_jm_tl(k, t_order, t_order, d, ctx->tables))
                entries.push_back(json{{"p", key.first.parts()},
                                       {"denominator", key.second.parts()},
                                       {"series", tseries_laurent_json(series)}});
        } else if (kd == "BKP") {
            for (const auto& [key, series] : hn::tau_jm_bkp(k, t_order, t_order, d, ctx->tables))
                entries.push_back(
                    json{{"denominator", key.parts()}, {"series", tseries_laurent_json(series)}});
        } else {
            throw hn::DomainError("kind must be TL or BKP");
        }
        return json{{"kind", kd}, {"k", k}, {"d", d}, {"t_order", t_order}, {"entries", entries}};
    });
}

hn_status hn_tau_hypergeometric(hn_ctx* ctx, const char* kind, int a, int N, int d, int t_order,
                                char** out_json) {
    return guard(ctx, out_json, [&] {
        std::string kd = kind ? kind : "";
        json entries = json::array();
        if (kd == "TL") {
            for (const auto& [key, series] : hn::tau_hypergeometric_tl(a, N, d, t_order, ctx->tables))
                entries.push_back(json{{"x1", key.first.parts()},
                                       {"x2", key.second.parts()},
                                       {"series", series_json(series, "t")}});
        } else if (kd == "BKP") {
            for (const auto& [key, series] : hn::tau_hypergeometric_bkp(a, N, d, t_order, ctx->tables))
                entries.push_back(json{{"y", key.parts()}, {"series", series_json(series, "t")}});
        } else {
            throw hn::DomainError("kind must be TL or BKP");
        }
        return json{{"kind", kd}, {"a", a}, {"N", N}, {"d", d}, {"entries", entries}};
    });
}

hn_status hn_verify(hn_ctx* ctx, const char* suite, int d, char** out_json) {
    return guard(ctx, out_json, [&] {
        hn::Report r = hn::run_suite(suite ? suite : "", d, ctx->tables, ctx->config.budget);
        return json{{"suite", suite}, {"pass", r.pass}, {"detail", r.detail}};
    });
}

hn_status hn_selftest(hn_ctx* ctx, const char* level, char** out_json) {
    return guard(ctx, out_json, [&] {
        std::string lv = level ? level : "fast";
        if (lv == "fast") return results_json(hn::run_fast_checks(ctx->tables, ctx->config.budget));
        if (lv == "full") return results_json(hn::run_acceptance(ctx->tables, ctx->config.budget));
        throw hn::DomainError("level must be fast or full");
    });
}

} // extern "C"
