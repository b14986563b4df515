#include "doctest.h"

#include <random>
#include <set>

#include "common.hpp"
#include "gmet/errors.hpp"
#include "gmet/fq.hpp"

using namespace gmet;
using namespace gmet::testutil;

TEST_CASE("rref normalizes generator sets") {
    LinearCode a = rref(2, 4, {{1, 1, 0, 0}, {1, 1, 0, 0}});
    CHECK(a.k() == 1);
    CHECK(a.basis == std::vector<std::vector<int>>{{1, 1, 0, 0}});

    LinearCode b = rref(2, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}});
    CHECK(b.basis == std::vector<std::vector<int>>{{1, 0, 1, 0}, {0, 1, 1, 0}});

    LinearCode c = rref(3, 3, {{1, 2, 0}});
    CHECK(c.basis == std::vector<std::vector<int>>{{1, 2, 0}});

    LinearCode scaled = rref(3, 3, {{2, 1, 0}});
    CHECK(scaled.basis == std::vector<std::vector<int>>{{1, 2, 0}});
}

TEST_CASE("non-prime q is rejected") {
    CHECK_THROWS_AS(rref(4, 2, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(FqVector(6, {0, 1}), std::invalid_argument);
}

TEST_CASE("dual code") {
    LinearCode c = rref(2, 4, {{1, 1, 0, 0}});
    LinearCode d = dual_code(c);
    CHECK(d.k() == 3);
    // contains the generators quoted for the same space
    std::set<std::vector<int>> all;
    for (const auto& w : codewords(d)) all.insert(w.entries);
    CHECK(all.count({0, 0, 1, 1}));
    CHECK(all.count({1, 1, 1, 0}));
    CHECK(all.count({1, 1, 0, 1}));

    LinearCode full = rref(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(dual_code(full).k() == 0);

    std::mt19937_64 rng(55);
    for (int round = 0; round < 100; ++round) {
        int q = (round % 2) ? 2 : 3;
        int n = 1 + static_cast<int>(rng() % 6);
        LinearCode code = random_code(rng, q, n, 3);
        LinearCode dual = dual_code(code);
        CHECK(dual.k() == n - code.k());
        for (const auto& a : code.basis)
            for (const auto& b : dual.basis) {
                int dot = 0;
                for (int i = 0; i < n; ++i) dot = (dot + a[i] * b[i]) % q;
                CHECK(dot == 0);
            }
        CHECK(dual_code(dual) == code);
    }
}

TEST_CASE("codewords enumeration") {
    LinearCode c = rref(2, 4, {{1, 1, 0, 0}});
    auto words = codewords(c);
    REQUIRE(words.size() == 2);
    CHECK(words[0].is_zero());
    CHECK(words[1].entries == std::vector<int>{1, 1, 0, 0});

    LinearCode zero = rref(2, 3, {});
    auto zw = codewords(zero);
    REQUIRE(zw.size() == 1);
    CHECK(zw[0].is_zero());

    LinearCode two = rref(2, 3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(codewords(two).size() == 4);

    std::mt19937_64 rng(77);
    for (int round = 0; round < 50; ++round) {
        int q = (round % 2) ? 2 : 3;
        LinearCode code = random_code(rng, q, 5, 3);
        auto ws = codewords(code);
        std::set<std::vector<int>> dedup;
        for (const auto& w : ws) dedup.insert(w.entries);
        std::size_t expect = 1;
        for (int i = 0; i < code.k(); ++i) expect *= q;
        CHECK(ws.size() == expect);
        CHECK(dedup.size() == expect);
        CHECK(ws[0].is_zero());
    }
}

TEST_CASE("codeword enumeration guard") {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 10; ++i) {
        std::vector<int> r(10, 0);
        r[i] = 1;
        rows.push_back(r);
    }
    LinearCode big = rref(2, 10, rows);
    CHECK_THROWS_AS(codewords(big, 1 << 4), EnumerationTooLarge);
}

TEST_CASE("codeword_masks matches the generic enumeration") {
    std::mt19937_64 rng(88);
    for (int round = 0; round < 50; ++round) {
        LinearCode code = random_code(rng, 2, 6, 4);
        auto ws = codewords(code);
        auto ms = codeword_masks(code);
        REQUIRE(ws.size() == ms.size());
        for (std::size_t i = 0; i < ws.size(); ++i) CHECK(ws[i].mask() == ms[i]);
    }
}

TEST_CASE("apply follows the rows-as-images convention") {
    LinearMap t(2, {{1, 1}, {0, 1}});
    CHECK(apply(t, FqVector(2, {1, 0})).entries == std::vector<int>{1, 1});
    CHECK(apply(LinearMap::identity(3, 4), FqVector(3, {0, 2, 1, 0})).entries == std::vector<int>{0, 2, 1, 0});
}

TEST_CASE("is_invertible and invert") {
    CHECK_FALSE(is_invertible(LinearMap(2, {{1, 1}, {1, 1}})));
    CHECK(is_invertible(LinearMap(2, {{1, 1}, {0, 1}})));
    CHECK_THROWS_AS(invert(LinearMap(2, {{1, 1}, {1, 1}})), SingularMap);

    std::mt19937_64 rng(202);
    int seen = 0;
    while (seen < 60) {
        int q = (seen % 2) ? 2 : 5;
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<int>> m(n, std::vector<int>(n));
        for (auto& row : m)
            for (int& x : row) x = static_cast<int>(rng() % q);
        LinearMap t(q, m);
        if (!is_invertible(t)) continue;
        ++seen;
        LinearMap inv = invert(t);
        CHECK(compose(inv, t) == LinearMap::identity(q, n));
        CHECK(compose(t, inv) == LinearMap::identity(q, n));
    }
}

TEST_CASE("compose applies the inner map first") {
    LinearMap f(2, {{0, 1}, {1, 0}});
    LinearMap g(2, {{1, 1}, {0, 1}});
    for (std::uint64_t m = 0; m < 4; ++m) {
        FqVector x = FqVector::from_mask(m, 2);
        CHECK(apply(compose(f, g), x) == apply(f, apply(g, x)));
        CHECK(apply(compose(g, f), x) == apply(g, apply(f, x)));
    }
}

TEST_CASE("mixed moduli are rejected") {
    CHECK_THROWS_AS(add(FqVector(2, {1}), FqVector(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(apply(LinearMap(2, {{1}}), FqVector(3, {1})), std::invalid_argument);
}
