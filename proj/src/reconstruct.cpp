#include "gmet/reconstruct.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "gmet/canonical.hpp"
#include "gmet/errors.hpp"

namespace gmet {

WeightOracle::WeightOracle(Digraph g) : n_(g.n()), graph_(std::move(g)) {}

WeightOracle::WeightOracle(int n, WeightTable table) : n_(n), table_(std::move(table)) {
    if (table_.n != n) throw std::invalid_argument("table dimension mismatch");
}

int WeightOracle::query(const SupportSet& s) {
    if (s.max_index() >= n_) throw std::out_of_range("support index out of range");
    ++count_;
    if (graph_) return g_weight(*graph_, s);
    return table_.at(s.mask());
}

Digraph infer_from_weight12(WeightOracle& oracle) {
    const int n = oracle.n();
    std::vector<int> w1(n);
    for (int i = 0; i < n; ++i) {
        w1[i] = oracle.query(SupportSet{i});
        if (w1[i] < 1 || w1[i] > n) throw InconsistentOracle("singleton weight out of range");
    }
    std::vector<std::vector<int>> w2(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int w = oracle.query(SupportSet{i, j});
            if (w < std::max(w1[i], w1[j]) || w > w1[i] + w1[j])
                throw InconsistentOracle("pair weight violates monotonicity");
            w2[i][j] = w2[j][i] = w;
        }
    // edge (i,j) of the expanded form iff w({i,j}) == w({i})
    Digraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && w2[i][j] == w1[i]) g.add_edge(i, j);
    // singleton closure sizes must match the answers
    for (int i = 0; i < n; ++i) {
        int dominated = 1;
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) ++dominated;
        if (dominated != w1[i]) throw InconsistentOracle("singleton weights inconsistent with pair answers");
    }
    return g;
}

WeightTable recover_matching_weights(const WeightTable& partial) {
    const int n = partial.n;
    std::vector<int> w1(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t m = std::uint64_t{1} << i;
        if (!partial.has(m)) throw MissingRequiredWeight("all singleton weights are required");
        w1[i] = partial.at(m);
    }
    std::vector<std::pair<int, int>> missing;
    std::vector<std::vector<int>> w2(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t m = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            if (partial.has(m))
                w2[i][j] = w2[j][i] = partial.at(m);
            else
                missing.emplace_back(i, j);
        }
    std::vector<bool> touched(n, false);
    for (auto [a, b] : missing) {
        if (touched[a] || touched[b]) throw MissingRequiredWeight("omitted pairs must form a matching");
        touched[a] = touched[b] = true;
    }

    WeightTable out = partial;
    for (auto [a, b] : missing) {
        // delta_a = |{a} u dominated(a)| excluding b; pair answers decide domination
        auto dominated_by = [&](int u, int excl) {
            std::vector<bool> dom(n, false);
            dom[u] = true;
            for (int j = 0; j < n; ++j) {
                if (j == u || j == excl) continue;
                if (w2[u][j] < 0) throw MissingRequiredWeight("pair weight missing outside the matching");
                if (w2[u][j] == w1[u]) dom[j] = true;
            }
            return dom;
        };
        auto dom_a = dominated_by(a, b);
        auto dom_b = dominated_by(b, a);
        int delta_a = static_cast<int>(std::count(dom_a.begin(), dom_a.end(), true));
        int delta_b = static_cast<int>(std::count(dom_b.begin(), dom_b.end(), true));
        bool a_dom_b, b_dom_a;
        if (w1[a] == delta_a)
            a_dom_b = false;
        else if (w1[a] == delta_a + 1)
            a_dom_b = true;
        else
            throw InconsistentOracle("singleton weight inconsistent with pair data");
        if (w1[b] == delta_b)
            b_dom_a = false;
        else if (w1[b] == delta_b + 1)
            b_dom_a = true;
        else
            throw InconsistentOracle("singleton weight inconsistent with pair data");

        int w;
        if (a_dom_b)
            w = w1[a];
        else if (b_dom_a)
            w = w1[b];
        else {
            int t = 0;
            for (int j = 0; j < n; ++j)
                if (j != a && j != b && dom_a[j] && dom_b[j]) ++t;
            w = delta_a + delta_b - t;
        }
        out.weights[(std::uint64_t{1} << a) | (std::uint64_t{1} << b)] = w;
    }
    return out;
}

std::int64_t d_of_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return (n + 1) / 2 + static_cast<std::int64_t>(n) * (n - 1) / 2;
}

LowerBoundWitness lower_bound_witness(int n) {
    if (n < 4) throw std::invalid_argument("construction needs n >= 4");
    LowerBoundWitness w;
    w.g1 = Digraph(n);
    w.g2 = Digraph(n);
    for (int i = 3; i < n; ++i)
        for (int j = 3; j < n; ++j)
            if (i != j) {
                w.g1.add_edge(i, j);
                w.g2.add_edge(i, j);
            }
    for (int i = 3; i < n; ++i)
        for (int j = 0; j < 3; ++j) {
            w.g1.add_edge(i, j);
            w.g2.add_edge(i, j);
        }
    w.g1.add_edge(0, 1);
    w.g2.add_edge(0, 2);
    w.s1 = SupportSet{0, 1};
    w.s2 = SupportSet{0, 2};
    return w;
}

Certificate certificate(const Digraph& g) {
    const int n = g.n();
    std::vector<SupportSet> closures(n);
    for (int v = 0; v < n; ++v) closures[v] = closure(g, SupportSet{v});

    std::set<std::pair<SupportSet, int>> entries;
    int sink = -1;
    for (int v = 0; v < n; ++v)
        if (closures[v].size() == 1) {
            sink = v;
            break;
        }

    std::vector<bool> covered(n, false);
    if (sink < 0 && n > 0) {
        // no sink: spend r+1 entries on a minimal-weight clique instead of 2r
        int u = 0;
        for (int v = 1; v < n; ++v)
            if (closures[v].size() < closures[u].size()) u = v;
        SupportSet clique = closures[u];
        for (int v : clique)
            if (closures[v] == clique) covered[v] = true;
        SupportSet members;
        for (int v = 0; v < n; ++v)
            if (covered[v]) members.insert(v);
        for (int v : members) entries.insert({SupportSet{v}, static_cast<int>(clique.size())});
        entries.insert({members, g_weight(g, members)});
    }
    for (int v = 0; v < n; ++v) {
        if (covered[v]) continue;
        int w = closures[v].size();
        entries.insert({SupportSet{v}, w});
        entries.insert({closures[v], w});
    }
    return Certificate(entries.begin(), entries.end());
}

bool verify_certificate(const Certificate& cert, int n) {
    if (n > 5) throw SearchTooLarge("certificate verification scans 2^{n(n-1)} graphs, n <= 5 only");
    if (n < 1) throw std::invalid_argument("n must be positive");
    for (const auto& [s, w] : cert)
        if (s.max_index() >= n) throw std::out_of_range("certificate support out of range");

    std::vector<std::pair<std::uint64_t, int>> entries;
    for (const auto& [s, w] : cert) entries.emplace_back(s.mask(), w);

    const int bits = n * (n - 1);
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) slots.emplace_back(u, v);

    std::uint64_t rows[5];
    auto close = [&](std::uint64_t seed) {
        std::uint64_t seen = seed, frontier = seed;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = rows[v] & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        return seen;
    };

    std::set<std::vector<std::uint64_t>> expanded_seen;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        for (int v = 0; v < n; ++v) rows[v] = 0;
        for (int b = 0; b < bits; ++b)
            if ((code >> b) & 1) rows[slots[b].first] |= std::uint64_t{1} << slots[b].second;
        bool ok = true;
        for (const auto& [mask, w] : entries)
            if (std::popcount(close(mask)) != w) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::vector<std::uint64_t> expanded(n);
        for (int v = 0; v < n; ++v) expanded[v] = close(std::uint64_t{1} << v) & ~(std::uint64_t{1} << v);
        expanded_seen.insert(std::move(expanded));
        if (expanded_seen.size() > 1) return false;
    }
    return expanded_seen.size() == 1;
}

MBounds m_bounds(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n == 1) return {0, 0, 0};  // the one-vertex metric needs no queries
    return {n, std::max<std::int64_t>(n, 2 * n - 4), 2 * n - 1};
}

ConsistencyResult consistency_check(const Digraph& g, const WeightTable& t) {
    if (t.n != g.n()) throw std::invalid_argument("table dimension mismatch");
    for (const auto& [mask, w] : t.weights) {
        SupportSet s = SupportSet::from_mask(mask);
        int truth = g_weight(g, s);
        if (truth != w) return {false, s, truth, w};
    }
    return {};
}

}  // namespace gmet
