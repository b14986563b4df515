#include "doctest.h"

#include <random>

#include "common.hpp"
#include "gmet/canonical.hpp"
#include "gmet/codes.hpp"
#include "gmet/errors.hpp"
#include "gmet/isometry.hpp"
#include "gmet/macwilliams.hpp"
#include "gmet/metric.hpp"
#include "naive.hpp"

using namespace gmet;
using namespace gmet::testutil;

namespace {

Digraph umbrella() { return Digraph::from_edges(3, {{2, 0}, {2, 1}}); }

}  // namespace

TEST_CASE("max_set") {
    ReducedForm r = reduced_form(umbrella());
    CHECK(max_set(r, FqVector(2, {1, 0, 1})) == SupportSet{2});
    ReducedForm h = reduced_form(hamm(4));
    CHECK(max_set(h, FqVector(2, {1, 0, 1, 1})) == SupportSet{0, 2, 3});
    CHECK(max_set(h, FqVector::zero(2, 4)) == SupportSet{});
}

TEST_CASE("cleared_form") {
    ReducedForm r = reduced_form(umbrella());
    CHECK(cleared_form(r, FqVector(2, {1, 0, 1})).entries == std::vector<int>{0, 0, 1});
    ReducedForm h = reduced_form(hamm(4));
    std::mt19937_64 rng(12);
    for (int round = 0; round < 20; ++round) {
        FqVector x = random_vector(rng, 2, 4);
        CHECK(cleared_form(h, x) == x);
    }
    CHECK(cleared_form(r, FqVector::zero(2, 3)).is_zero());
}

TEST_CASE("cleared form weight never exceeds the original") {
    std::mt19937_64 rng(3131);
    for (int round = 0; round < 150; ++round) {
        int n = 1 + static_cast<int>(rng() % 7);
        Digraph g = random_graph(rng, n);
        ReducedForm r = reduced_form(g);
        FqVector x = random_vector(rng, 2, n);
        CHECK(g_weight(g, cleared_form(r, x)) <= g_weight(g, x));
    }
}

TEST_CASE("msg") {
    CHECK(msg(tri(), SupportSet{0, 1, 2}) == SupportSet{0});
    CHECK(msg(tri(), SupportSet{1, 2}) == SupportSet{1});
    std::mt19937_64 rng(44);
    for (int round = 0; round < 30; ++round) {
        std::uint64_t m = rng() & 0xF;
        SupportSet s = SupportSet::from_mask(m);
        CHECK(msg(hamm(4), s) == s);
    }
}

TEST_CASE("msg is a minimal generating subset inside the max set") {
    std::mt19937_64 rng(456);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 8);
        Digraph g = random_graph(rng, n);
        ReducedForm r = reduced_form(g);
        std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
        SupportSet x = SupportSet::from_mask(m);
        SupportSet gen = msg(g, x);
        CHECK(closure(g, gen) == closure(g, x));
        CHECK(gen.subset_of(x));
        // removing any element changes the closure
        for (int v : gen) {
            std::vector<int> rest;
            for (int w : gen)
                if (w != v) rest.push_back(w);
            CHECK(closure(g, SupportSet(rest)) != closure(g, x));
        }
        if (!x.empty()) {
            FqVector xv = FqVector::from_mask(m, n);
            CHECK(gen.subset_of(max_set(r, xv)));
        }
    }
}

TEST_CASE("min_distance") {
    LinearCode c1 = rref(2, 3, {{1, 1, 0}});
    LinearCode c2 = rref(2, 3, {{0, 0, 1}});
    CHECK(min_distance(prx3(), c1) == 2);
    CHECK(min_distance(prx3(), c2) == 2);
    CHECK(min_distance(hamm(4), rref(2, 4, {{1, 1, 0, 0}})) == 2);
    CHECK_THROWS_AS(min_distance(hamm(4), rref(2, 4, {})), ZeroCode);
}

TEST_CASE("packing radius brute force on the worked example") {
    CHECK(packing_radius_bruteforce(prx3(), rref(2, 3, {{1, 1, 0}})) == 0);
    CHECK(packing_radius_bruteforce(prx3(), rref(2, 3, {{0, 0, 1}})) == 1);
    // classical Hamming packing for the repetition code
    for (int n = 2; n <= 6; ++n) {
        LinearCode rep = rref(2, n, {std::vector<int>(n, 1)});
        CHECK(packing_radius_bruteforce(hamm(n), rep) == (n - 1) / 2);
    }
}

TEST_CASE("packing radius brute force agrees with the naive pairwise scan") {
    std::mt19937_64 rng(654);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 4);
        int q = (round % 3) ? 2 : 3;
        Digraph g = random_graph(rng, n);
        LinearCode c = random_code(rng, q, n, 2);
        CHECK(packing_radius_bruteforce(g, c) == naive::naive_packing_radius(g, c));
    }
}

TEST_CASE("packing radius is below the minimum distance; not a function of it") {
    CHECK(min_distance(prx3(), rref(2, 3, {{1, 1, 0}})) == min_distance(prx3(), rref(2, 3, {{0, 0, 1}})));
    CHECK(packing_radius_bruteforce(prx3(), rref(2, 3, {{1, 1, 0}})) !=
          packing_radius_bruteforce(prx3(), rref(2, 3, {{0, 0, 1}})));
    std::mt19937_64 rng(988);
    for (int round = 0; round < 80; ++round) {
        int n = 2 + static_cast<int>(rng() % 4);
        Digraph g = random_graph(rng, n);
        LinearCode c = random_code(rng, 2, n, 2);
        if (c.k() == 0) continue;
        CHECK(packing_radius_bruteforce(g, c) < min_distance(g, c));
    }
}

TEST_CASE("canonical decomposition of the umbrella example") {
    LinearCode c = rref(2, 3, {{1, 0, 1}});
    DecomposedCode dec = canonical_decomposition(umbrella(), c);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].k() == 0);
    CHECK(dec.components[1].basis == std::vector<std::vector<int>>{{0, 0, 1}});
    CHECK(apply(dec.isometry, FqVector(2, {1, 0, 1})).entries == std::vector<int>{0, 0, 1});
    CHECK(is_isometry(umbrella(), dec.isometry));
}

TEST_CASE("canonical decomposition of the zero code") {
    DecomposedCode dec = canonical_decomposition(umbrella(), rref(2, 3, {}));
    CHECK(dec.isometry == LinearMap::identity(2, 3));
    for (const auto& comp : dec.components) CHECK(comp.k() == 0);
}

TEST_CASE("canonical decomposition requires a hierarchical poset") {
    CHECK_THROWS_AS(canonical_decomposition(prx3(), rref(2, 3, {{1, 0, 0}})), NotHierarchical);
    LinearCode w = non_decomposable_witness(prx3());
    CHECK(w.k() == 1);
    CHECK(w.basis == std::vector<std::vector<int>>{{0, 1, 1}});  // e_1 + e_2: pi(2) at level 2, pi(1) at level 1
    CHECK_THROWS_AS(non_decomposable_witness(six()), NotApplicable);
}

TEST_CASE("decomposition produces verified isometries and level components, random hierarchical graphs") {
    std::mt19937_64 rng(314159);
    int done = 0;
    while (done < 120) {
        int n = 1 + static_cast<int>(rng() % 6);
        Digraph g = random_graph(rng, n);
        ReducedForm r = reduced_form(g);
        if (!is_hierarchical(r)) continue;
        ++done;
        int q = (done % 4 == 0) ? 3 : 2;
        LinearCode c = random_code(rng, q, n, 3);
        DecomposedCode dec = canonical_decomposition(g, c);
        CHECK(is_isometry(g, dec.isometry));
        auto levels = r.original_level_sets();
        int dim = 0;
        std::vector<FqVector> all_rows;
        for (std::size_t lvl = 0; lvl < dec.components.size(); ++lvl) {
            const LinearCode& comp = dec.components[lvl];
            dim += comp.k();
            for (const auto& row : comp.basis) {
                for (int j = 0; j < n; ++j)
                    if (row[j]) {
                        bool in_level = false;
                        for (int v : levels[lvl])
                            if (v == j) in_level = true;
                        CHECK(in_level);
                    }
                all_rows.emplace_back(q, row);
            }
        }
        CHECK(dim == c.k());
        // direct sum equals T(C)
        std::vector<FqVector> image_rows;
        for (const auto& row : c.basis) image_rows.push_back(apply(dec.isometry, FqVector(q, row)));
        CHECK(rref(all_rows, n) == rref(image_rows, n));
        // the weight enumerator is invariant under the witness isometry
        CHECK(weight_enumerator(g, rref(all_rows, n)) == weight_enumerator(g, c));
    }
}

TEST_CASE("packing radius formula on the worked examples") {
    Digraph chain_down = Digraph::from_edges(2, {{1, 0}});
    CHECK(packing_radius_formula(chain_down, rref(2, 2, {{0, 1}})) == 1);
    CHECK(packing_radius_formula(hamm(3), rref(2, 3, {{1, 1, 1}})) == 1);
    CHECK_THROWS_AS(packing_radius_formula(prx3(), rref(2, 3, {{1, 0, 0}})), NotApplicable);
    CHECK_THROWS_AS(packing_radius_formula(hamm(3), rref(2, 3, {})), ZeroCode);
    // L varies inside a level: formula refuses
    Digraph mixed = Digraph::from_edges(3, {{1, 2}, {2, 1}});  // cliques {0} and {1,2} on one level
    CHECK_THROWS_AS(packing_radius_formula(mixed, rref(2, 3, {{1, 0, 0}})), NotApplicable);
}

TEST_CASE("packing radius formula equals brute force on level-constant hierarchical graphs") {
    std::mt19937_64 rng(271828);
    int done = 0;
    while (done < 80) {
        int n = 2 + static_cast<int>(rng() % 5);
        Digraph g = random_graph(rng, n);
        ReducedForm r = reduced_form(g);
        if (!is_hierarchical(r)) continue;
        auto levels = r.level_sets();
        bool constant = true;
        for (const auto& lv : levels)
            for (int v : lv)
                if (r.L[v] != r.L[lv.front()]) constant = false;
        if (!constant) continue;
        LinearCode c = random_code(rng, 2, n, 3);
        if (c.k() == 0) continue;
        ++done;
        CHECK(packing_radius_formula(g, c) == packing_radius_bruteforce(g, c));
    }
}
