#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "common.hpp"
#include "gmet/canonical.hpp"
#include "gmet/digraph.hpp"
#include "naive.hpp"

using namespace gmet;
using namespace gmet::testutil;

TEST_CASE("closure: reachability from the support") {
    CHECK(closure(tri(), {0}) == SupportSet{0, 1, 2});
    CHECK(closure(hamm(4), {1, 3}) == SupportSet{1, 3});
    CHECK(closure(path3(), {0}) == SupportSet{0, 1, 2});
    CHECK(closure(hamm(4), {}) == SupportSet{});
    CHECK_THROWS_AS(closure(hamm(2), {5}), std::out_of_range);
}

TEST_CASE("dominates") {
    CHECK(dominates(path3(), 0, 2));
    CHECK_FALSE(dominates(hamm(4), 0, 1));
    CHECK(dominates(tri(), 2, 1));
    CHECK(dominates(tri(), 1, 1));  // reflexive
    CHECK_FALSE(dominates(path3(), 2, 0));
}

TEST_CASE("is_shortcut") {
    CHECK(is_shortcut(tri(), 0, 1));
    CHECK(is_shortcut(tri(), 0, 2));
    CHECK_FALSE(is_shortcut(path3(), 0, 1));
    Digraph p = path3();
    p.add_edge(0, 2);
    CHECK(is_shortcut(p, 0, 2));
    CHECK_THROWS_AS(is_shortcut(p, 1, 1), std::invalid_argument);
}

TEST_CASE("reverse") {
    CHECK(reverse(path3()) == Digraph::from_edges(3, {{1, 0}, {2, 1}}));
    CHECK(reverse(hamm(4)) == hamm(4));
    CHECK(reverse(pair4()) == pair4());
}

TEST_CASE("induced subgraph compresses indices in increasing order") {
    CHECK(induced_subgraph(tri(), {1, 2}) == two_clique());
    CHECK(induced_subgraph(tri(), {}) == Digraph(0));
    CHECK(induced_subgraph(six(), {4, 5}) == two_clique());
    CHECK(induced_subgraph(path3(), {0, 2}) == Digraph(2));
}

TEST_CASE("self-loops are rejected") {
    Digraph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("closure algebra laws on random graphs") {
    std::mt19937_64 rng(12345);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 10);
        Digraph g = random_graph(rng, n);
        std::uint64_t full = (std::uint64_t{1} << n) - 1;
        SupportSet x = SupportSet::from_mask(rng() & full);
        SupportSet y = SupportSet::from_mask(rng() & full);
        SupportSet cx = closure(g, x);
        // extensive
        CHECK(x.subset_of(cx));
        // idempotent
        CHECK(closure(g, cx) == cx);
        // monotone
        SupportSet xy = set_union(x, y);
        CHECK(cx.subset_of(closure(g, xy)));
        // <X u Y> = <<X> u <Y>>
        CHECK(closure(g, xy) == closure(g, set_union(cx, closure(g, y))));
    }
}

TEST_CASE("domination flips under reversal") {
    std::mt19937_64 rng(777);
    for (int round = 0; round < 100; ++round) {
        int n = 2 + static_cast<int>(rng() % 7);
        Digraph g = random_graph(rng, n);
        Digraph r = reverse(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) CHECK(dominates(g, u, v) == dominates(r, v, u));
    }
}

TEST_CASE("J closed in g iff complement closed in reverse(g)") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 100; ++round) {
        int n = 1 + static_cast<int>(rng() % 7);
        Digraph g = random_graph(rng, n);
        Digraph r = reverse(g);
        std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t m = 0; m <= full; ++m) {
            bool a = is_closed_mask(g, m);
            bool b = is_closed_mask(r, full & ~m);
            CHECK(a == b);
        }
    }
}

TEST_CASE("closure agrees with the naive oracle") {
    std::mt19937_64 rng(999);
    for (int round = 0; round < 150; ++round) {
        int n = 1 + static_cast<int>(rng() % 8);
        Digraph g = random_graph(rng, n);
        std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
        SupportSet s = SupportSet::from_mask(m);
        CHECK(closure(g, s).size() == naive::naive_weight(g, to_std_set(s)));
    }
}

TEST_CASE("mask and general closure paths agree") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 150; ++round) {
        int n = 1 + static_cast<int>(rng() % 12);
        Digraph g = random_graph(rng, n);
        std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
        CHECK(closure_mask(g, m) == closure(g, SupportSet::from_mask(m)).mask());
    }
}
