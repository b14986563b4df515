#ifndef GMET_TESTS_COMMON_HPP
#define GMET_TESTS_COMMON_HPP

#include <random>
#include <set>
#include <vector>

#include "gmet/digraph.hpp"
#include "gmet/fq.hpp"

namespace gmet::testutil {

// fixtures used across the suite
inline Digraph tri() { return Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}); }
inline Digraph hamm(int n) { return Digraph(n); }
inline Digraph path3() { return Digraph::from_edges(3, {{0, 1}, {1, 2}}); }
inline Digraph pair4() { return Digraph::from_edges(4, {{2, 3}, {3, 2}}); }
inline Digraph prx3() { return Digraph::from_edges(3, {{2, 0}}); }
inline Digraph six() {
    return Digraph::from_edges(6, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}});
}
inline Digraph chain2() { return Digraph::from_edges(2, {{0, 1}}); }
inline Digraph complete(int n) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.add_edge(u, v);
    return g;
}
inline Digraph cycle(int n) {
    Digraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}
inline Digraph two_clique() { return Digraph::from_edges(2, {{0, 1}, {1, 0}}); }

inline Digraph random_graph(std::mt19937_64& rng, int n, double p = 0.3) {
    Digraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) g.add_edge(u, v);
    return g;
}

inline FqVector random_vector(std::mt19937_64& rng, int q, int n) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<int> e(n);
    for (int& x : e) x = d(rng);
    return FqVector(q, std::move(e));
}

inline LinearCode random_code(std::mt19937_64& rng, int q, int n, int max_dim) {
    std::uniform_int_distribution<int> dim(0, max_dim);
    int rows = dim(rng);
    std::vector<std::vector<int>> raw;
    for (int i = 0; i < rows; ++i) raw.push_back(random_vector(rng, q, n).entries);
    return rref(q, n, raw);
}

// every digraph on n vertices, by edge-slot bitmask
inline Digraph graph_from_code(int n, std::uint64_t code) {
    Digraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((code >> bit) & 1) g.add_edge(u, v);
            ++bit;
        }
    return g;
}

inline std::set<int> to_std_set(const SupportSet& s) { return std::set<int>(s.begin(), s.end()); }

}  // namespace gmet::testutil

#endif
