#include "gmet/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gmet/errors.hpp"

namespace gmet {

Digraph expanded_form(const Digraph& g) {
    const int n = g.n();
    Digraph e(n);
    if (n <= 64) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t reach = closure_mask(g, std::uint64_t{1} << v) & ~(std::uint64_t{1} << v);
            while (reach) {
                e.add_edge(v, std::countr_zero(reach));
                reach &= reach - 1;
            }
        }
    } else {
        for (int v = 0; v < n; ++v)
            for (int w : closure(g, SupportSet{v}))
                if (w != v) e.add_edge(v, w);
    }
    return e;
}

namespace {

// Iterative Tarjan; component ids assigned in discovery order, remapped afterwards.
struct TarjanState {
    const Digraph& g;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int comp_count = 0;

    explicit TarjanState(const Digraph& gg)
        : g(gg), index(gg.n(), -1), low(gg.n(), 0), comp(gg.n(), -1), on_stack(gg.n(), false) {}

    void run(int root) {
        struct Frame {
            int v;
            int next_child;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            bool descended = false;
            for (int w = child; w < g.n(); ++w) {
                if (!g.edge(v, w)) continue;
                if (index[w] < 0) {
                    frames.back().next_child = w + 1;
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comp_count;
                } while (w != v);
                ++comp_count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
    TarjanState st(g);
    for (int v = 0; v < g.n(); ++v)
        if (st.index[v] < 0) st.run(v);
    std::vector<std::vector<int>> comps(st.comp_count);
    for (int v = 0; v < g.n(); ++v) comps[st.comp[v]].push_back(v);
    std::sort(comps.begin(), comps.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return comps;
}

std::vector<std::vector<int>> ReducedForm::level_sets() const {
    std::vector<std::vector<int>> out(height);
    for (int v = 0; v < m; ++v) out[level[v] - 1].push_back(v);
    return out;
}

std::vector<std::vector<int>> ReducedForm::original_level_sets() const {
    std::vector<std::vector<int>> out(height);
    for (int v = 0; v < n(); ++v) out[level[pi[v]] - 1].push_back(v);
    return out;
}

ReducedForm reduced_form(const Digraph& g) {
    const int n = g.n();
    auto comps = strongly_connected_components(g);
    const int m = static_cast<int>(comps.size());

    ReducedForm r;
    r.m = m;
    r.pi.assign(n, -1);
    r.L.assign(m, 0);
    for (int c = 0; c < m; ++c) {
        r.L[c] = static_cast<int>(comps[c].size());
        for (int v : comps[c]) r.pi[v] = c;
    }

    // condensation reachability: reach[a][b] iff some vertex of a dominates some vertex of b
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (int c = 0; c < m; ++c) {
        SupportSet cl = closure(g, SupportSet{comps[c].front()});
        for (int v : cl) reach[c][r.pi[v]] = true;
        reach[c][c] = false;
    }

    // Hasse edges: transitive reduction of the (acyclic) reachability relation
    r.hasse = Digraph(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (!reach[a][b]) continue;
            bool short_cut = false;
            for (int c = 0; c < m && !short_cut; ++c)
                if (c != a && c != b && reach[a][c] && reach[c][b]) short_cut = true;
            if (!short_cut) r.hasse.add_edge(a, b);
        }

    // height of v = longest chain with v maximal = longest out-path in the condensation
    r.level.assign(m, 0);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    // process in an order where all vertices reachable from v come first
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ra = 0, rb = 0;
        for (int c = 0; c < m; ++c) {
            ra += reach[a][c];
            rb += reach[b][c];
        }
        return ra < rb;
    });
    for (int v : order) {
        int best = 0;
        for (int w = 0; w < m; ++w)
            if (reach[v][w]) best = std::max(best, r.level[w]);
        r.level[v] = best + 1;
    }
    r.height = m ? *std::max_element(r.level.begin(), r.level.end()) : 0;
    return r;
}

bool dominates_reduced(const ReducedForm& r, int a, int b) { return dominates(r.hasse, a, b); }

bool is_hierarchical(const ReducedForm& r) {
    auto levels = r.level_sets();
    for (int i = 1; i < r.height; ++i)
        for (int u : levels[i])
            for (int v : levels[i - 1])
                if (!dominates_reduced(r, u, v)) return false;
    return true;
}

bool same_metric(const Digraph& g1, const Digraph& g2) {
    if (g1.n() != g2.n()) throw std::invalid_argument("same_metric: vertex counts differ");
    return expanded_form(g1) == expanded_form(g2);
}

namespace {

// backtracking L-weighted digraph isomorphism on the reduced forms
bool extend_iso(const ReducedForm& r1, const ReducedForm& r2, std::vector<int>& map, std::vector<bool>& used,
                int pos) {
    const int m = r1.m;
    if (pos == m) return true;
    for (int cand = 0; cand < m; ++cand) {
        if (used[cand]) continue;
        if (r1.L[pos] != r2.L[cand] || r1.level[pos] != r2.level[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < pos && ok; ++prev) {
            if (r1.hasse.edge(pos, prev) != r2.hasse.edge(cand, map[prev])) ok = false;
            if (ok && r1.hasse.edge(prev, pos) != r2.hasse.edge(map[prev], cand)) ok = false;
        }
        if (!ok) continue;
        map[pos] = cand;
        used[cand] = true;
        if (extend_iso(r1, r2, map, used, pos + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> metric_isomorphism(const Digraph& g1, const Digraph& g2, int guard_m) {
    if (g1.n() != g2.n()) return std::nullopt;
    ReducedForm r1 = reduced_form(g1), r2 = reduced_form(g2);
    if (r1.m != r2.m || r1.height != r2.height) return std::nullopt;
    {
        auto l1 = r1.L, l2 = r2.L;
        std::sort(l1.begin(), l1.end());
        std::sort(l2.begin(), l2.end());
        if (l1 != l2) return std::nullopt;
    }
    if (r1.m > guard_m) throw SearchTooLarge("reduced form too large for isomorphism search");
    std::vector<int> map(r1.m, -1);
    std::vector<bool> used(r1.m, false);
    if (extend_iso(r1, r2, map, used, 0)) return map;
    return std::nullopt;
}

bool isomorphic_metrics(const Digraph& g1, const Digraph& g2, int guard_m) {
    return metric_isomorphism(g1, g2, guard_m).has_value();
}

}  // namespace gmet
