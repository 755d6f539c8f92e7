// SPDX-License-Identifier: Apache-2.0
#include "hn/characters.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace hn;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}

TEST_CASE("single character values") {
    CHECK(character(P({3}), P({3})) == 1);           // trivial representation
    CHECK(character(P({1, 1, 1}), P({2, 1})) == -1); // sign representation
    CHECK(character(P({2, 1}), P({3})) == -1);
    CHECK(character(P({2, 1}), P({2, 1})) == 0);
    CHECK(character(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK_THROWS_AS(character(P({2}), P({3})), DomainError);
}

TEST_CASE("dimensions agree with the hook formula") {
    CHECK(dimension(P({5})) == 1);
    CHECK(dimension(P({2, 1})) == 2);
    CHECK(dimension(P({2, 2})) == 2);
    for (int d = 0; d <= 8; ++d) {
        Integer sumsq = 0;
        for (const auto& l : enumerate_partitions(d)) {
            long long via_mn =
                d == 0 ? 1 : character(l, Partition(std::vector<int>(static_cast<size_t>(d), 1)));
            CHECK(via_mn == dimension(l));
            CHECK(via_mn > 0);
            sumsq += Integer(via_mn) * via_mn;
        }
        CHECK(sumsq == factorial(d)); // sum of dim^2 = |S_d|
    }
}

TEST_CASE("standard representation = fixed points - 1") {
    // chi_{(d-1,1)}(sigma) counts fixed points minus one; independent of MN
    for (int d = 2; d <= 6; ++d)
        for (const auto& delta : enumerate_partitions(d)) {
            std::vector<int> parts{d - 1, 1};
            if (d == 2) parts = {1, 1};
            CHECK(character(Partition(parts), delta) == delta.multiplicity(1) - 1);
        }
}

TEST_CASE("regular representation vanishes off the identity") {
    for (int d = 1; d <= 7; ++d) {
        for (const auto& delta : enumerate_partitions(d)) {
            long long acc = 0;
            for (const auto& l : enumerate_partitions(d)) acc += dimension(l) * character(l, delta);
            CHECK(acc == (delta.colength() == 0 ? factorial(d).convert_to<long long>() : 0));
        }
    }
}

TEST_CASE("conjugation twists by the sign character") {
    for (int d = 1; d <= 7; ++d)
        for (const auto& l : enumerate_partitions(d))
            for (const auto& delta : enumerate_partitions(d)) {
                long long sign = delta.colength() % 2 == 0 ? 1 : -1;
                CHECK(character(l, delta) == sign * character(l.conjugate(), delta));
            }
}

TEST_CASE("normalized characters") {
    CHECK(normalized_character(P({2, 1}), P({3})) == Rational(-1));
    CHECK(normalized_character(P({3}), P({2, 1})) == Rational(3));
    for (const auto& l : enumerate_partitions(5))
        CHECK(normalized_character(l, P({1, 1, 1, 1, 1})) == Rational(1));
}

TEST_CASE("full tables and canonical order") {
    TableCache cache;
    const CharacterTable& t1 = cache.get(1);
    CHECK(t1.matrix() == std::vector<std::vector<long long>>{{1}});

    const CharacterTable& t2 = cache.get(2);
    CHECK(t2.chi(P({2}), P({2})) == 1);
    CHECK(t2.chi(P({2}), P({1, 1})) == 1);
    CHECK(t2.chi(P({1, 1}), P({2})) == -1);
    CHECK(t2.chi(P({1, 1}), P({1, 1})) == 1);

    const CharacterTable& t3 = cache.get(3);
    CHECK(t3.chi(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(t3.chi(P({2, 1}), P({2, 1})) == 0);
    CHECK(t3.chi(P({2, 1}), P({3})) == -1);
    CHECK(t3.dim(P({2, 1})) == 2);

    CHECK_THROWS_AS(cache.get(13), DomainError); // beyond the default maximum
}

TEST_CASE("orthogonality holds and detects corruption") {
    TableCache cache;
    for (int d = 0; d <= 5; ++d) CHECK(verify_orthogonality(cache.get(d)).pass);

    CharacterTable bad(3);
    bad.matrix()[1][1] += 1;
    Report r = verify_orthogonality(bad);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("[2,1]") != std::string::npos);
}

TEST_CASE("disk cache round trip and corruption recovery") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hn-cache-test";
    fs::remove_all(dir);

    {
        TableCache cache(dir.string());
        cache.get(4);
        CHECK(fs::exists(dir / "chartab-v1-d4.json"));
        CHECK(cache.take_warnings().empty());
    }
    {
        // valid cache loads silently
        TableCache cache(dir.string());
        CHECK(cache.get(4).chi(P({2, 2}), P({2, 1, 1})) == 0);
        CHECK(cache.take_warnings().empty());
    }
    {
        std::ofstream(dir / "chartab-v1-d4.json") << "{ not json";
        TableCache cache(dir.string());
        CHECK(cache.get(4).dim(P({2, 2})) == 2); // recomputed
        auto w = cache.take_warnings();
        REQUIRE(w.size() == 1);
        CHECK(w[0].find("invalid") != std::string::npos);
    }
    {
        // damaged entry fails the integrity check and is recomputed
        std::ifstream in(dir / "chartab-v1-d4.json");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        auto pos = text.find("matrix");
        REQUIRE(pos != std::string::npos);
        text.replace(text.find('1', pos), 1, "7");
        std::ofstream(dir / "chartab-v1-d4.json") << text;
        TableCache cache(dir.string());
        CHECK(verify_orthogonality(cache.get(4)).pass);
        CHECK_FALSE(cache.take_warnings().empty());
    }
    fs::remove_all(dir);
}
