// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hn {

// Young diagram: weakly decreasing positive parts. The empty partition has
// weight 0. Partitions are cheap value types and serve as map keys throughout.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& bracketed); // "[2,1]"

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int colength() const { return weight_ - length(); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }

    // multiplicity of a given part value
    int multiplicity(int value) const;

    Partition conjugate() const;

    // contents j-i over all nodes (i,j), row-major
    std::vector<int> contents() const;
    std::vector<int> hook_lengths() const;

    // z_Delta = prod m_i! i^{m_i} = d!/|C_Delta|
    Integer z_order() const;
    Integer class_size() const;

    std::string str() const; // "[2,1]"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Canonical order: by weight, then reverse-lexicographic within a weight,
    // so that (d) comes first and (1^d) last. enumerate_partitions and every
    // serialized table follow this order.
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of d in canonical (reverse-lexicographic) order.
std::vector<Partition> enumerate_partitions(int d);

// Partition count by the pentagonal-number recurrence; used as an
// independent cross-check on enumerate_partitions.
Integer partition_count(int d);

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// merged multiset of parts, used for power-sum monomial products
Partition merge_parts(const Partition& a, const Partition& b);

} // namespace hn
