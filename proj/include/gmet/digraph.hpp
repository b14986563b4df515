#ifndef GMET_DIGRAPH_HPP
#define GMET_DIGRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace gmet {

/// Loop-free directed graph on vertices 0..n-1, adjacency kept as packed bit rows.
/// Values are immutable once built; all operations on them are pure functions.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    static Digraph from_edges(int n, std::initializer_list<std::pair<int, int>> es);
    static Digraph from_edges(int n, const std::vector<std::pair<int, int>>& es);

    int n() const { return n_; }
    int words() const { return words_; }

    bool edge(int u, int v) const;
    void add_edge(int u, int v);  // rejects self-loops
    void remove_edge(int u, int v);

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    const std::uint64_t* row(int u) const { return adj_.data() + static_cast<std::size_t>(u) * words_; }
    std::uint64_t* row(int u) { return adj_.data() + static_cast<std::size_t>(u) * words_; }

    bool operator==(const Digraph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Set of vertex indices (the support of a word), kept sorted.
class SupportSet {
public:
    SupportSet() = default;
    SupportSet(std::initializer_list<int> xs);
    explicit SupportSet(std::vector<int> xs);

    static SupportSet from_mask(std::uint64_t m);
    std::uint64_t mask() const;  // requires all indices < 64

    bool contains(int i) const;
    void insert(int i);
    int size() const { return static_cast<int>(items_.size()); }
    bool empty() const { return items_.empty(); }
    const std::vector<int>& items() const { return items_; }
    int max_index() const { return items_.empty() ? -1 : items_.back(); }

    bool subset_of(const SupportSet& other) const;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    bool operator==(const SupportSet&) const = default;
    auto operator<=>(const SupportSet&) const = default;

private:
    std::vector<int> items_;
};

SupportSet set_union(const SupportSet& a, const SupportSet& b);
SupportSet set_intersection(const SupportSet& a, const SupportSet& b);

/// All vertices reachable from x by directed paths, including x itself.
SupportSet closure(const Digraph& g, const SupportSet& x);

/// True iff v lies in the closure of {u}. Reflexive: dominates(g, u, u) holds.
bool dominates(const Digraph& g, int u, int v);

/// True iff there is a simple directed path u -> ... -> v of length >= 2,
/// i.e. v is reachable from an out-neighbour w of u (w != v) with u deleted.
bool is_shortcut(const Digraph& g, int u, int v);

Digraph reverse(const Digraph& g);

/// Subgraph on s, vertices re-indexed 0..|s|-1 in increasing original order.
Digraph induced_subgraph(const Digraph& g, const SupportSet& s);

bool is_closed(const Digraph& g, const SupportSet& s);

// Mask-based fast paths, valid for n <= 64.
std::uint64_t closure_mask(const Digraph& g, std::uint64_t seed);
bool is_closed_mask(const Digraph& g, std::uint64_t m);

/// closure({v}) for every vertex, as masks (n <= 64).
std::vector<std::uint64_t> vertex_closure_masks(const Digraph& g);

}  // namespace gmet

#endif
