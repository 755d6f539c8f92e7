// SPDX-License-Identifier: Apache-2.0
#include "hn/json_io.hpp"

#include <functional>

namespace hn {

nlohmann::json partition_json(const Partition& p) { return nlohmann::json(p.parts()); }

std::vector<Partition> parse_profiles(const std::string& text) {
    // accepted: "[3],[3],[2,1]"  |  "[[3],[3],[2,1]]"  |  "" (no profiles)
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return {};
    if (s.size() >= 2 && s[0] == '[' && s[1] == '[') {
        nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw DomainError("malformed profile list '" + text + "'");
        std::vector<Partition> out;
        for (const auto& e : j) {
            if (!e.is_array()) throw DomainError("malformed profile '" + e.dump() + "'");
            out.emplace_back(e.get<std::vector<int>>());
        }
        return out;
    }
    std::vector<Partition> out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '[') throw DomainError("expected '[' at '" + s.substr(i) + "'");
        size_t close = s.find(']', i);
        if (close == std::string::npos) throw DomainError("unterminated profile in '" + text + "'");
        out.push_back(Partition::parse(s.substr(i, close - i + 1)));
        i = close + 1;
        if (i < s.size()) {
            if (s[i] != ',') throw DomainError("expected ',' between profiles at '" + s.substr(i) + "'");
            ++i;
        }
    }
    return out;
}

nlohmann::json central_element_json(const CentralElement& x) {
    nlohmann::json j;
    j["d"] = x.d;
    j["basis"] = x.basis == Basis::Class ? "class" : "idempotent";
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [p, c] : x.coeffs) coeffs[p.str()] = rat_str(c);
    j["coeffs"] = coeffs;
    return j;
}

CentralElement parse_central_element(const nlohmann::json& j) {
    CentralElement x;
    x.d = j.at("d").get<int>();
    std::string basis = j.at("basis").get<std::string>();
    if (basis == "class") x.basis = Basis::Class;
    else if (basis == "idempotent") x.basis = Basis::Idempotent;
    else throw DomainError("unknown basis '" + basis + "'");
    for (const auto& [key, value] : j.at("coeffs").items()) {
        Partition p = Partition::parse(key);
        if (p.weight() != x.d) throw DomainError("coefficient key " + key + " has wrong weight");
        x.set(p, rat_parse(value.get<std::string>()));
    }
    return x;
}

nlohmann::json powersum_json(const PowerSumPoly& f) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [mono, c] : f.terms()) coeffs[mono.str()] = rat_str(c);
    return nlohmann::json{{"coeffs", coeffs}};
}

PowerSumPoly parse_powersum(const nlohmann::json& j) {
    PowerSumPoly f;
    for (const auto& [key, value] : j.at("coeffs").items())
        f.add_term(Partition::parse(key), rat_parse(value.get<std::string>()));
    return f;
}

std::string tuple_key_str(const std::vector<Partition>& key) {
    std::string s = "[";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i) s += ",";
        s += key[i].str();
    }
    s += "]";
    return s;
}

nlohmann::json tally_json(const ProfileTally& t) {
    nlohmann::json j;
    j["d"] = t.d;
    j["towers"] = t.towers;
    j["n_exponent"] = t.n_exponent;
    nlohmann::json entries = nlohmann::json::object();
    // complete grid so vanishing Hurwitz numbers are visible
    std::vector<Partition> all = enumerate_partitions(t.d);
    std::vector<Partition> cur;
    std::function<void(int)> rec = [&](int v) {
        if (v == t.towers) {
            entries[tuple_key_str(cur)] = rat_str(t.at(cur));
            return;
        }
        for (const auto& p : all) {
            cur.push_back(p);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    j["entries"] = entries;
    return j;
}

} // namespace hn
