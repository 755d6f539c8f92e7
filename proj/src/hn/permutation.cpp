// SPDX-License-Identifier: Apache-2.0
#include "hn/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hn {

Perm::Perm(int d) : img_(static_cast<size_t>(d)) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(x)])
            throw DomainError("invalid permutation image array");
        seen[static_cast<size_t>(x)] = true;
    }
}

Perm Perm::operator*(const Perm& o) const {
    std::vector<int> r(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
        r[x] = img_[static_cast<size_t>(o.img_[x])];
    Perm p;
    p.img_ = std::move(r);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> r(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) r[static_cast<size_t>(img_[x])] = static_cast<int>(x);
    Perm p;
    p.img_ = std::move(r);
    return p;
}

bool Perm::is_identity() const {
    for (size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x)) return false;
    return true;
}

Partition Perm::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        size_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = static_cast<size_t>(img_[y]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

const std::vector<Perm>& symmetric_group(int d) {
    static std::map<int, std::vector<Perm>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<int> img(static_cast<size_t>(d));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> all;
    do {
        all.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return cache.emplace(d, std::move(all)).first->second;
}

std::vector<Perm> conjugacy_class(const Partition& type) {
    std::vector<Perm> out;
    for (const Perm& p : symmetric_group(type.weight()))
        if (p.cycle_type() == type) out.push_back(p);
    return out;
}

} // namespace hn
