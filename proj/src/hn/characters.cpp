// SPDX-License-Identifier: Apache-2.0
#include "hn/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <unordered_map>

namespace hn {

namespace {

struct MNKey {
    Partition lambda;
    size_t pos;
    bool operator==(const MNKey& o) const { return pos == o.pos && lambda == o.lambda; }
};

struct MNKeyHash {
    size_t operator()(const MNKey& k) const {
        return PartitionHash{}(k.lambda) * 31 + k.pos;
    }
};

// Murnaghan-Nakayama over border strips, via beta-numbers: removing a strip
// of size s corresponds to beta_j -> beta_j - s when the target value is
// free; the sign is (-1)^(number of occupied values passed over).
long long mn(const Partition& lambda, const std::vector<int>& cycles, size_t pos,
             std::unordered_map<MNKey, long long, MNKeyHash>& memo) {
    if (lambda.weight() == 0) return 1;
    MNKey key{lambda, pos};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int s = cycles[pos];
    int len = lambda.length();
    std::vector<long long> beta(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) beta[static_cast<size_t>(j)] = lambda.part(j) + (len - 1 - j);

    long long total = 0;
    for (int j = 0; j < len; ++j) {
        long long target = beta[static_cast<size_t>(j)] - s;
        if (target < 0) continue;
        bool occupied = false;
        int passed = 0;
        for (int i = 0; i < len; ++i) {
            if (i == j) continue;
            long long b = beta[static_cast<size_t>(i)];
            if (b == target) { occupied = true; break; }
            if (b > target && b < beta[static_cast<size_t>(j)]) ++passed;
        }
        if (occupied) continue;

        std::vector<long long> nb = beta;
        nb[static_cast<size_t>(j)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<long long>());
        std::vector<int> parts;
        for (int i = 0; i < len; ++i) {
            int part = static_cast<int>(nb[static_cast<size_t>(i)]) - (len - 1 - i);
            if (part > 0) parts.push_back(part);
        }
        Partition rest(parts);
        long long sub = mn(rest, cycles, pos + 1, memo);
        total += (passed % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

std::unordered_map<MNKey, long long, MNKeyHash>& mn_memo_for(const std::vector<int>& cycles) {
    // one memo per descending cycle vector; tables are built column by column
    static std::map<std::vector<int>, std::unordered_map<MNKey, long long, MNKeyHash>> memos;
    return memos[cycles];
}

} // namespace

long long character(const Partition& lambda, const Partition& delta) {
    if (lambda.weight() != delta.weight())
        throw DomainError("character: |lambda| != |delta| (" + lambda.str() + " vs " + delta.str() + ")");
    std::vector<int> cycles = delta.parts(); // already descending
    return mn(lambda, cycles, 0, mn_memo_for(cycles));
}

long long dimension(const Partition& lambda) {
    if (lambda.weight() == 0) return 1;
    Integer h = 1;
    for (int x : lambda.hook_lengths()) h *= x;
    Integer dim = factorial(lambda.weight()) / h;
    return dim.convert_to<long long>();
}

Rational normalized_character(const Partition& lambda, const Partition& delta) {
    return Rational(delta.class_size() * character(lambda, delta), Integer(dimension(lambda)));
}

CharacterTable::CharacterTable(int d) : d_(d), order_(enumerate_partitions(d)) {
    for (int i = 0; i < static_cast<int>(order_.size()); ++i)
        index_[order_[static_cast<size_t>(i)]] = i;
    size_t n = order_.size();
    m_.assign(n, std::vector<long long>(n, 0));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            m_[r][c] = character(order_[r], order_[c]);
}

CharacterTable::CharacterTable(int d, std::vector<std::vector<long long>> m)
    : d_(d), order_(enumerate_partitions(d)), m_(std::move(m)) {
    for (int i = 0; i < static_cast<int>(order_.size()); ++i)
        index_[order_[static_cast<size_t>(i)]] = i;
    if (m_.size() != order_.size()) throw DomainError("character matrix shape mismatch");
    for (const auto& row : m_)
        if (row.size() != order_.size()) throw DomainError("character matrix shape mismatch");
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw DomainError("partition " + p.str() + " not of weight " + std::to_string(d_));
    return it->second;
}

long long CharacterTable::chi(const Partition& lambda, const Partition& delta) const {
    return chi(index_of(lambda), index_of(delta));
}

long long CharacterTable::dim(const Partition& lambda) const {
    return chi(index_of(lambda), static_cast<int>(order_.size()) - 1); // identity class (1^d) is last
}

Rational CharacterTable::normalized(const Partition& lambda, const Partition& delta) const {
    return Rational(delta.class_size() * chi(lambda, delta), Integer(dim(lambda)));
}

Report verify_orthogonality(const CharacterTable& t) {
    const auto& order = t.order();
    int n = static_cast<int>(order.size());
    Integer dfact = factorial(t.degree());

    // column orthogonality (orth1): sum_lambda (dim/d!)^2 phi(mu) phi(Delta) = delta_{mu,Delta}/z
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            Rational acc = 0;
            for (int l = 0; l < n; ++l) {
                Rational dd(Integer(t.chi(l, n - 1)), dfact);
                acc += dd * dd * t.normalized(order[static_cast<size_t>(l)], order[static_cast<size_t>(a)]) *
                       t.normalized(order[static_cast<size_t>(l)], order[static_cast<size_t>(b)]);
            }
            Rational expect = (a == b) ? Rational(1, order[static_cast<size_t>(a)].z_order()) : Rational(0);
            if (acc != expect)
                return {false, "orth1 fails at (" + order[static_cast<size_t>(a)].str() + "," +
                                   order[static_cast<size_t>(b)].str() + ")"};
        }
    }
    // row orthogonality (orth2): (dim/d!)^2 sum_Delta z phi_l phi_m = delta_{lm}
    for (int l = 0; l < n; ++l) {
        for (int mu = l; mu < n; ++mu) {
            Rational acc = 0;
            for (int a = 0; a < n; ++a) {
                acc += Rational(order[static_cast<size_t>(a)].z_order()) *
                       t.normalized(order[static_cast<size_t>(l)], order[static_cast<size_t>(a)]) *
                       t.normalized(order[static_cast<size_t>(mu)], order[static_cast<size_t>(a)]);
            }
            Rational dd(Integer(t.chi(l, n - 1)), dfact);
            acc *= dd * dd;
            Rational expect = (l == mu) ? Rational(1) : Rational(0);
            if (acc != expect)
                return {false, "orth2 fails at (" + order[static_cast<size_t>(l)].str() + "," +
                                   order[static_cast<size_t>(mu)].str() + ")"};
        }
    }
    return {true, "orthogonality exact for d=" + std::to_string(t.degree())};
}

TableCache::TableCache(std::string cache_dir, int max_degree)
    : cache_dir_(std::move(cache_dir)), max_degree_(max_degree) {}

const CharacterTable& TableCache::get(int d) {
    if (d < 0) throw DomainError("negative degree");
    if (d > max_degree_)
        throw DomainError("degree " + std::to_string(d) + " exceeds configured maximum " +
                          std::to_string(max_degree_) + " (raise max_weight to allow)");
    auto it = tables_.find(d);
    if (it != tables_.end()) return *it->second;

    std::unique_ptr<CharacterTable> t;
    if (!cache_dir_.empty()) t = try_load(d);
    if (!t) {
        t = std::make_unique<CharacterTable>(d);
        if (!cache_dir_.empty()) store_to_disk(*t);
    }
    auto& ref = *t;
    tables_[d] = std::move(t);
    return ref;
}

std::unique_ptr<CharacterTable> TableCache::try_load(int d) {
    namespace fs = std::filesystem;
    fs::path path = fs::path(cache_dir_) / ("chartab-v1-d" + std::to_string(d) + ".json");
    if (!fs::exists(path)) return nullptr;
    try {
        std::ifstream in(path);
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("version").get<int>() != 1 || j.at("d").get<int>() != d)
            throw DomainError("version/degree mismatch");
        auto order = enumerate_partitions(d);
        auto parts = j.at("partitions");
        if (parts.size() != order.size()) throw DomainError("partition count mismatch");
        for (size_t i = 0; i < order.size(); ++i)
            if (!(Partition(parts[i].get<std::vector<int>>()) == order[i]))
                throw DomainError("partition order mismatch");
        auto t = std::make_unique<CharacterTable>(d, j.at("matrix").get<std::vector<std::vector<long long>>>());
        // cheap integrity checks: trivial row all ones, dims positive,
        // sum of squared dimensions equal to d!
        Integer sumsq = 0;
        int n = static_cast<int>(order.size());
        for (int l = 0; l < n; ++l) {
            if (t->chi(0, l) != 1) throw DomainError("trivial-representation row damaged");
            long long dim = t->chi(l, n - 1);
            if (dim <= 0) throw DomainError("non-positive dimension entry");
            sumsq += Integer(dim) * dim;
        }
        if (sumsq != factorial(d)) throw DomainError("sum of dim^2 != d!");
        return t;
    } catch (const std::exception& e) {
        warnings_.push_back("character table cache " + path.string() + " invalid (" + e.what() +
                            "); recomputing and overwriting");
        return nullptr;
    }
}

void TableCache::store_to_disk(const CharacterTable& t) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cache_dir_, ec);
    fs::path path = fs::path(cache_dir_) / ("chartab-v1-d" + std::to_string(t.degree()) + ".json");
    nlohmann::json j;
    j["version"] = 1;
    j["d"] = t.degree();
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : t.order()) parts.push_back(p.parts());
    j["partitions"] = parts;
    j["matrix"] = t.matrix();
    // write-temp-then-rename keeps readers away from partial files
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            warnings_.push_back("cache directory " + cache_dir_ + " not writable; table not persisted");
            return;
        }
        out << j.dump();
    }
    fs::rename(tmp, path, ec);
    if (ec) warnings_.push_back("cache rename failed: " + ec.message());
}

std::vector<std::string> TableCache::take_warnings() {
    std::vector<std::string> w;
    w.swap(warnings_);
    return w;
}

} // namespace hn
