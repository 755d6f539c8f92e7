// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hn/partition.hpp"

#include <vector>

namespace hn {

// Permutation of {0..d-1} as an image array. Composition is right-to-left:
// (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int d);
    explicit Perm(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    Partition cycle_type() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

// All elements of S_d, in lexicographic image order; cached per degree.
const std::vector<Perm>& symmetric_group(int d);

// Elements of the conjugacy class with the given cycle type.
std::vector<Perm> conjugacy_class(const Partition& type);

} // namespace hn
