#include "gmet/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gmet/errors.hpp"

namespace gmet {

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Digraph Digraph::from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
    return from_edges(n, std::vector<std::pair<int, int>>(es));
}

Digraph Digraph::from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Digraph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

bool Digraph::edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Digraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void Digraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int Digraph::edge_count() const {
    int c = 0;
    for (std::uint64_t w : adj_) c += std::popcount(w);
    return c;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if ((row(u)[v >> 6] >> (v & 63)) & 1) es.emplace_back(u, v);
    return es;
}

SupportSet::SupportSet(std::initializer_list<int> xs) : SupportSet(std::vector<int>(xs)) {}

SupportSet::SupportSet(std::vector<int> xs) : items_(std::move(xs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    if (!items_.empty() && items_.front() < 0) throw std::out_of_range("negative vertex index");
}

SupportSet SupportSet::from_mask(std::uint64_t m) {
    SupportSet s;
    while (m) {
        s.items_.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

std::uint64_t SupportSet::mask() const {
    std::uint64_t m = 0;
    for (int i : items_) {
        if (i >= 64) throw std::out_of_range("index too large for mask form");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

bool SupportSet::contains(int i) const { return std::binary_search(items_.begin(), items_.end(), i); }

void SupportSet::insert(int i) {
    auto it = std::lower_bound(items_.begin(), items_.end(), i);
    if (it == items_.end() || *it != i) items_.insert(it, i);
}

bool SupportSet::subset_of(const SupportSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

SupportSet set_union(const SupportSet& a, const SupportSet& b) {
    std::vector<int> out;
    std::set_union(a.items().begin(), a.items().end(), b.items().begin(), b.items().end(), std::back_inserter(out));
    return SupportSet(std::move(out));
}

SupportSet set_intersection(const SupportSet& a, const SupportSet& b) {
    std::vector<int> out;
    std::set_intersection(a.items().begin(), a.items().end(), b.items().begin(), b.items().end(),
                          std::back_inserter(out));
    return SupportSet(std::move(out));
}

namespace {

void check_set(const Digraph& g, const SupportSet& s) {
    if (s.max_index() >= g.n()) throw std::out_of_range("support index out of range for graph");
}

}  // namespace

SupportSet closure(const Digraph& g, const SupportSet& x) {
    check_set(g, x);
    const int words = g.words();
    std::vector<std::uint64_t> seen(words, 0);
    std::vector<int> stack;
    for (int v : x) {
        seen[v >> 6] |= std::uint64_t{1} << (v & 63);
        stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const std::uint64_t* r = g.row(v);
        for (int w = 0; w < words; ++w) {
            std::uint64_t fresh = r[w] & ~seen[w];
            seen[w] |= fresh;
            while (fresh) {
                stack.push_back(w * 64 + std::countr_zero(fresh));
                fresh &= fresh - 1;
            }
        }
    }
    std::vector<int> out;
    for (int w = 0; w < words; ++w) {
        std::uint64_t m = seen[w];
        while (m) {
            out.push_back(w * 64 + std::countr_zero(m));
            m &= m - 1;
        }
    }
    return SupportSet(std::move(out));
}

bool dominates(const Digraph& g, int u, int v) {
    if (u == v) {
        if (u < 0 || u >= g.n()) throw std::out_of_range("vertex index out of range");
        return true;
    }
    return closure(g, SupportSet{u}).contains(v);
}

bool is_shortcut(const Digraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("is_shortcut: u == v");
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) throw std::out_of_range("vertex index out of range");
    // v reachable from an out-neighbour w of u, w not in {u, v}, in g with u removed.
    Digraph cut = g;
    for (int w = 0; w < g.n(); ++w) {
        if (cut.edge(w, u)) cut.remove_edge(w, u);
        if (cut.edge(u, w)) cut.remove_edge(u, w);
    }
    for (int w = 0; w < g.n(); ++w) {
        if (w == v || !g.edge(u, w)) continue;
        if (closure(cut, SupportSet{w}).contains(v)) return true;
    }
    return false;
}

Digraph reverse(const Digraph& g) {
    Digraph r(g.n());
    for (auto [u, v] : g.edges()) r.add_edge(v, u);
    return r;
}

Digraph induced_subgraph(const Digraph& g, const SupportSet& s) {
    check_set(g, s);
    const auto& vs = s.items();
    Digraph h(s.size());
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            if (a != b && g.edge(vs[a], vs[b])) h.add_edge(a, b);
    return h;
}

bool is_closed(const Digraph& g, const SupportSet& s) { return closure(g, s) == s; }

std::uint64_t closure_mask(const Digraph& g, std::uint64_t seed) {
    if (g.n() > 64) throw EnumerationTooLarge("closure_mask requires n <= 64");
    std::uint64_t seen = seed;
    std::uint64_t frontier = seed;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint64_t fresh = g.row(v)[0] & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen;
}

bool is_closed_mask(const Digraph& g, std::uint64_t m) { return closure_mask(g, m) == m; }

std::vector<std::uint64_t> vertex_closure_masks(const Digraph& g) {
    if (g.n() > 64) throw EnumerationTooLarge("vertex_closure_masks requires n <= 64");
    std::vector<std::uint64_t> cl(g.n());
    for (int v = 0; v < g.n(); ++v) cl[v] = closure_mask(g, std::uint64_t{1} << v);
    return cl;
}

}  // namespace gmet
