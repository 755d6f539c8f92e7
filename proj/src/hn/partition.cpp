// SPDX-License-Identifier: Apache-2.0
#include "hn/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& s) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i >= s.size() || s[i] != '[') throw DomainError("expected '[' in partition '" + s + "'");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            size_t j = i;
            if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw DomainError("malformed partition '" + s + "'");
            parts.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') { ++i; continue; }
            if (i < s.size() && s[i] == ']') { ++i; break; }
            throw DomainError("malformed partition '" + s + "'");
        }
    }
    skip_ws();
    if (i != s.size()) throw DomainError("trailing characters in partition '" + s + "'");
    return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
    int m = 0;
    for (int x : parts_)
        if (x == value) ++m;
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

std::vector<int> Partition::contents() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(weight_));
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j) out.push_back(j - i);
    return out;
}

std::vector<int> Partition::hook_lengths() const {
    Partition conj = conjugate();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(weight_));
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j)
            out.push_back(parts_[static_cast<size_t>(i)] - j + conj.part(j) - i - 1);
    return out;
}

Integer Partition::z_order() const {
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    Integer z = 1;
    for (auto [value, m] : mult) z *= factorial(m) * int_pow(value, static_cast<unsigned>(m));
    return z;
}

Integer Partition::class_size() const { return factorial(weight_) / z_order(); }

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (weight_ != o.weight_) return weight_ <=> o.weight_;
    size_t n = std::min(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (parts_[i] != o.parts_[i]) return o.parts_[i] <=> parts_[i]; // larger part first
    return parts_.size() <=> o.parts_.size();
}

namespace {

void gen_rec(int remaining, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw DomainError("negative weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_rec(d, d, acc, out);
    if (d == 0) out = {Partition()};
    return out;
}

Integer partition_count(int d) {
    if (d < 0) return 0;
    std::vector<Integer> p(static_cast<size_t>(d) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= d; ++n) {
        Integer acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Integer term = 0;
            if (g1 <= n) term += p[static_cast<size_t>(n - g1)];
            if (g2 <= n) term += p[static_cast<size_t>(n - g2)];
            acc += (k % 2 == 1) ? term : -term;
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p[static_cast<size_t>(d)];
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

} // namespace hn
