// SPDX-License-Identifier: Apache-2.0
#include "hn/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hn;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}

TEST_CASE("enumeration order and counts") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(3) ==
          std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
    CHECK(enumerate_partitions(5).size() == 7);

    // counts against the pentagonal-number recurrence up to 30
    for (int d = 0; d <= 30; ++d) {
        if (d <= 14)
            CHECK(Integer(enumerate_partitions(d).size()) == partition_count(d));
    }
    CHECK(partition_count(30) == 5604);

    // no duplicates, all valid, descending reverse-lex order
    auto all = enumerate_partitions(8);
    std::set<Partition> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(Partition(std::vector<int>{0}), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), DomainError);
}

TEST_CASE("z order and class size") {
    CHECK(P({1}).z_order() == 1);
    CHECK(P({2, 1}).z_order() == 2);
    CHECK(P({3}).z_order() == 3);
    CHECK(P({1, 1, 1}).class_size() == 1);
    CHECK(P({2, 1}).class_size() == 3);
    CHECK(P({3}).class_size() == 2);

    // class equation sum |C| = d! for all d <= 12
    for (int d = 0; d <= 12; ++d) {
        Integer total = 0;
        for (const auto& p : enumerate_partitions(d)) {
            total += p.class_size();
            CHECK(p.z_order() * p.class_size() == factorial(d));
        }
        CHECK(total == factorial(d));
    }
}

TEST_CASE("colength, contents, hooks") {
    CHECK(P({1, 1, 1}).colength() == 0);
    CHECK(P({3}).colength() == 2);
    CHECK(P({2, 2, 1}).colength() == 2);

    CHECK(P({1}).contents() == std::vector<int>{0});
    auto c21 = P({2, 1}).contents();
    std::sort(c21.begin(), c21.end());
    CHECK(c21 == std::vector<int>{-1, 0, 1});
    CHECK(P({3}).contents() == std::vector<int>{0, 1, 2});

    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        return v;
    };
    CHECK(sorted(P({1}).hook_lengths()) == std::vector<int>{1});
    CHECK(sorted(P({2, 1}).hook_lengths()) == std::vector<int>{3, 1, 1});
    CHECK(sorted(P({2, 2}).hook_lengths()) == std::vector<int>{3, 2, 2, 1});

    // hook product divides d!
    for (const auto& p : enumerate_partitions(6)) {
        Integer prod = 1;
        for (int h : p.hook_lengths()) prod *= h;
        CHECK(factorial(6) % prod == 0);
    }
}

TEST_CASE("contents of conjugate negate") {
    for (int d = 0; d <= 9; ++d)
        for (const auto& p : enumerate_partitions(d)) {
            CHECK(p.contents().size() == static_cast<size_t>(d));
            long long sum = 0, csum = 0;
            for (int c : p.contents()) sum += c;
            for (int c : p.conjugate().contents()) csum += c;
            CHECK(sum == -csum);
            CHECK(p.conjugate().conjugate() == p);
        }
}

TEST_CASE("parsing and printing") {
    CHECK(Partition::parse("[2,1]") == P({2, 1}));
    CHECK(Partition::parse("[]") == Partition());
    CHECK(Partition::parse(" [ 3 , 3 , 1 ] ") == P({3, 3, 1}));
    CHECK(P({2, 1}).str() == "[2,1]");
    CHECK_THROWS_AS(Partition::parse("[2,"), DomainError);
    CHECK_THROWS_AS(Partition::parse("2,1"), DomainError);
    CHECK_THROWS_AS(Partition::parse("[1,2]"), DomainError);
}

TEST_CASE("rational formatting") {
    CHECK(rat_str(Rational(2)) == "2/1");
    CHECK(rat_str(Rational(-1, 3)) == "-1/3");
    CHECK(rat_parse("1/3") == Rational(1, 3));
    CHECK(rat_parse("-4/6") == Rational(-2, 3));
    CHECK(rat_parse("0.3") == Rational(3, 10));
    CHECK(rat_parse("-2.5") == Rational(-5, 2));
    CHECK(rat_parse("7") == Rational(7));
    CHECK_THROWS_AS(rat_parse("1/0"), DomainError);
    CHECK_THROWS_AS(rat_parse("abc"), DomainError);
}
