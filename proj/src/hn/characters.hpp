// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/partition.hpp"
#include "hn/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hn {

// Full integer character table of S_d. Rows are irreps lambda, columns are
// classes Delta, both in canonical partition order.
class CharacterTable {
public:
    explicit CharacterTable(int d);
    CharacterTable(int d, std::vector<std::vector<long long>> m); // adopt precomputed entries

    int degree() const { return d_; }
    const std::vector<Partition>& order() const { return order_; }
    int index_of(const Partition& p) const;

    long long chi(const Partition& lambda, const Partition& delta) const;
    long long chi(int lambda_idx, int delta_idx) const {
        return m_[static_cast<size_t>(lambda_idx)][static_cast<size_t>(delta_idx)];
    }
    long long dim(const Partition& lambda) const;

    // phi_lambda(Delta) = |C_Delta| chi_lambda(Delta) / dim lambda
    Rational normalized(const Partition& lambda, const Partition& delta) const;

    std::vector<std::vector<long long>>& matrix() { return m_; }
    const std::vector<std::vector<long long>>& matrix() const { return m_; }

private:
    int d_;
    std::vector<Partition> order_;
    std::map<Partition, int> index_;
    std::vector<std::vector<long long>> m_;
};

// Single character value chi_lambda at a permutation of cycle type delta,
// by Murnaghan-Nakayama with memoization. |lambda| must equal |delta|.
long long character(const Partition& lambda, const Partition& delta);

long long dimension(const Partition& lambda);

Rational normalized_character(const Partition& lambda, const Partition& delta);

struct Report {
    bool pass = true;
    std::string detail;
};

// Both orthogonality relations, checked exactly over all pairs. Fails with
// the first offending pair named.
Report verify_orthogonality(const CharacterTable& t);

// Shared, lazily built store of character tables with an optional on-disk
// JSON cache (files chartab-v1-d{d}.json under cache_dir). A corrupt or
// stale cache file is recomputed and overwritten; the warning is collected
// into `warnings`.
class TableCache {
public:
    explicit TableCache(std::string cache_dir = "", int max_degree = 12);

    const CharacterTable& get(int d);
    int max_degree() const { return max_degree_; }
    void set_max_degree(int d) { max_degree_ = d; }
    const std::string& cache_dir() const { return cache_dir_; }

    std::vector<std::string> take_warnings();

private:
    std::string cache_dir_;
    int max_degree_;
    std::map<int, std::unique_ptr<CharacterTable>> tables_;
    std::vector<std::string> warnings_;

    std::unique_ptr<CharacterTable> try_load(int d);
    void store_to_disk(const CharacterTable& t);
};

} // namespace hn
