#include "gmet/isometry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gmet/canonical.hpp"
#include "gmet/errors.hpp"
#include "gmet/metric.hpp"

namespace gmet {

std::vector<int> PermutationIsometry::inverse() const {
    std::vector<int> inv(perm.size());
    for (int i = 0; i < n(); ++i) inv[perm[i]] = i;
    return inv;
}

LinearMap PermutationIsometry::as_linear_map(int q) const {
    auto inv = inverse();
    std::vector<std::vector<int>> m(n(), std::vector<int>(n(), 0));
    for (int k = 0; k < n(); ++k) m[k][inv[k]] = 1;  // T(e_k) = e_{perm^{-1}(k)}
    return LinearMap(q, std::move(m));
}

bool respects_domination(const Digraph& g, const LinearMap& t) {
    const int n = g.n();
    if (t.n() != n) throw std::invalid_argument("dimension mismatch");
    for (int i = 0; i < n; ++i) {
        if (!t.matrix[i][i]) return false;
        SupportSet cl = closure(g, SupportSet{i});
        for (int j = 0; j < n; ++j)
            if (t.matrix[i][j] && !cl.contains(j)) return false;
    }
    return is_invertible(t);
}

namespace {

struct AutSearch {
    const Digraph& e;
    std::vector<std::uint64_t> sig;  // per-vertex invariant: (outdeg, indeg, closure size)
    std::vector<int> map;
    std::vector<bool> used;
    std::vector<PermutationIsometry>* out;

    void run(int pos) {
        const int n = e.n();
        if (pos == n) {
            out->push_back({map});
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || sig[pos] != sig[cand]) continue;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                if (e.edge(pos, prev) != e.edge(cand, map[prev])) ok = false;
                if (ok && e.edge(prev, pos) != e.edge(map[prev], cand)) ok = false;
            }
            if (!ok) continue;
            map[pos] = cand;
            used[cand] = true;
            run(pos + 1);
            used[cand] = false;
        }
    }
};

}  // namespace

std::vector<PermutationIsometry> aut_expanded(const Digraph& g, int guard_n) {
    const int n = g.n();
    if (n > guard_n) throw SearchTooLarge("automorphism search guard exceeded");
    Digraph e = expanded_form(g);
    std::vector<std::uint64_t> sig(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t outd = 0, ind = 0;
        for (int w = 0; w < n; ++w) {
            outd += e.edge(v, w);
            ind += e.edge(w, v);
        }
        sig[v] = (outd << 32) | ind;
    }
    std::vector<PermutationIsometry> out;
    AutSearch search{e, sig, std::vector<int>(n, -1), std::vector<bool>(n, false), &out};
    search.run(0);
    return out;
}

namespace {

// bijection rho with rho(i) in cand[i]; candidates tried in ascending order
bool match_candidates(const std::vector<std::vector<int>>& cand, std::vector<int>& rho, std::vector<bool>& used,
                      std::size_t pos) {
    if (pos == cand.size()) return true;
    for (int c : cand[pos]) {
        if (used[c]) continue;
        rho[pos] = c;
        used[c] = true;
        if (match_candidates(cand, rho, used, pos + 1)) return true;
        used[c] = false;
    }
    return false;
}

}  // namespace

IsometryDecomposition decompose_isometry(const Digraph& g, const LinearMap& t) {
    const int n = g.n();
    if (t.n() != n) throw std::invalid_argument("dimension mismatch");
    if (!is_invertible(t)) throw NotAnIsometry("map is singular");

    std::vector<SupportSet> vertex_cl(n);
    for (int v = 0; v < n; ++v) vertex_cl[v] = closure(g, SupportSet{v});

    std::vector<std::vector<int>> cand(n);
    for (int i = 0; i < n; ++i) {
        FqVector img(t.q, t.matrix[i]);
        SupportSet supp = img.support();
        if (supp.empty()) throw NotAnIsometry("image of a basis vector is zero");
        SupportSet cl = closure(g, supp);
        for (int v : supp)
            if (vertex_cl[v] == cl) cand[i].push_back(v);
        if (cand[i].empty()) throw NotAnIsometry("image closure is not generated by a single vertex");
    }
    std::vector<int> rho(n, -1);
    std::vector<bool> used(n, false);
    if (!match_candidates(cand, rho, used, 0)) throw NotAnIsometry("no consistent vertex correspondence");

    // rho must be an automorphism of the expanded form
    Digraph e = expanded_form(g);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && e.edge(u, v) != e.edge(rho[u], rho[v]))
                throw NotAnIsometry("vertex correspondence is not an automorphism");

    PermutationIsometry phi;
    phi.perm.assign(n, 0);
    for (int i = 0; i < n; ++i) phi.perm[rho[i]] = i;  // phi = rho^{-1}, so T_phi(e_k) = e_{rho(k)}

    LinearMap phi_map = phi.as_linear_map(t.q);
    LinearMap nmap = compose(invert(phi_map), t);
    if (!respects_domination(g, nmap)) throw NotAnIsometry("residual map does not respect domination");
    return {phi, nmap};
}

bool is_isometry(const Digraph& g, const LinearMap& t, std::int64_t guard) {
    const int n = g.n();
    if (t.n() != n) throw std::invalid_argument("dimension mismatch");
    std::int64_t total = 1;
    bool small = true;
    for (int i = 0; i < n && small; ++i) {
        total *= t.q;
        if (total > guard) small = false;
    }
    if (small) {
        LinearCode full = rref(t.q, n, LinearMap::identity(t.q, n).matrix);
        bool ok = true;
        for_each_codeword(full, [&](const FqVector& x) {
            if (ok && g_weight(g, apply(t, x)) != g_weight(g, x)) ok = false;
        });
        return ok;
    }
    try {
        decompose_isometry(g, t);
        return true;
    } catch (const NotAnIsometry&) {
        return false;
    }
}

std::int64_t clique_block_count(int r, int q) {
    const std::int64_t offdiag_bits = static_cast<std::int64_t>(r) * (r - 1);
    std::int64_t cells = 1;
    for (int i = 0; i < offdiag_bits; ++i) {
        cells *= q;
        if (cells > (std::int64_t{1} << 22)) throw SearchTooLarge("clique block too large to enumerate");
    }
    std::int64_t diag_choices = 1;
    for (int i = 0; i < r; ++i) diag_choices *= (q - 1);

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j) slots.emplace_back(i, j);

    std::int64_t count = 0;
    std::vector<std::vector<int>> m(r, std::vector<int>(r));
    std::vector<int> diag(r, 1), off(slots.size(), 0);
    for (std::int64_t d = 0; d < diag_choices; ++d) {
        {
            std::int64_t v = d;
            for (int i = 0; i < r; ++i) {
                diag[i] = 1 + static_cast<int>(v % (q - 1));
                v /= (q - 1);
            }
        }
        for (std::int64_t o = 0; o < cells; ++o) {
            std::int64_t v = o;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                off[s] = static_cast<int>(v % q);
                v /= q;
            }
            for (int i = 0; i < r; ++i) m[i][i] = diag[i];
            for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s].first][slots[s].second] = off[s];
            if (is_invertible(LinearMap(q, m))) ++count;
        }
    }
    return count;
}

std::int64_t n_group_count(const Digraph& g, int q) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    const int n = g.n();
    auto comps = strongly_connected_components(g);
    bool acyclic = true;
    for (const auto& c : comps)
        if (c.size() > 1) acyclic = false;

    std::vector<SupportSet> cl(n);
    for (int v = 0; v < n; ++v) cl[v] = closure(g, SupportSet{v});

    if (acyclic) {
        // every pattern matrix is triangular under a topological order
        std::int64_t count = 1;
        for (int v = 0; v < n; ++v) {
            count *= (q - 1);
            for (int i = 1; i < cl[v].size(); ++i) count *= q;
        }
        return count;
    }
    std::vector<int> comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::int64_t count = 1;
    for (const auto& c : comps) count *= clique_block_count(static_cast<int>(c.size()), q);
    std::int64_t cross = 0;
    for (int i = 0; i < n; ++i)
        for (int j : cl[i])
            if (comp_of[i] != comp_of[j]) ++cross;
    for (std::int64_t i = 0; i < cross; ++i) count *= q;
    return count;
}

std::int64_t aut_times_n(const Digraph& g, int q) {
    return static_cast<std::int64_t>(aut_expanded(g).size()) * n_group_count(g, q);
}

namespace {

// all matrices with nonzero diagonal whose support respects domination, invertible
void enumerate_n_set(const Digraph& g, int q, const std::function<void(const LinearMap&)>& fn, std::int64_t guard) {
    const int n = g.n();
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        SupportSet cl = closure(g, SupportSet{i});
        for (int j : cl)
            if (j != i) slots.emplace_back(i, j);
    }
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= (q - 1);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        total *= q;
        if (total > guard) throw SearchTooLarge("N(G) enumeration guard exceeded");
    }
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    std::int64_t diag_choices = 1;
    for (int i = 0; i < n; ++i) diag_choices *= (q - 1);
    std::int64_t cells = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) cells *= q;
    for (std::int64_t d = 0; d < diag_choices; ++d) {
        {
            std::int64_t v = d;
            for (int i = 0; i < n; ++i) {
                m[i][i] = 1 + static_cast<int>(v % (q - 1));
                v /= (q - 1);
            }
        }
        for (std::int64_t o = 0; o < cells; ++o) {
            std::int64_t v = o;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                m[slots[s].first][slots[s].second] = static_cast<int>(v % q);
                v /= q;
            }
            LinearMap cand(q, m);
            if (is_invertible(cand)) fn(cand);
        }
    }
}

std::vector<int> encode_map(const LinearMap& t) {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(t.n()) * t.n());
    for (const auto& row : t.matrix) key.insert(key.end(), row.begin(), row.end());
    return key;
}

}  // namespace

std::vector<LinearMap> enumerate_isometries(const Digraph& g, int q, std::int64_t guard) {
    auto auts = aut_expanded(g);
    if (static_cast<std::int64_t>(auts.size()) * n_group_count(g, q) > guard)
        throw SearchTooLarge("isometry group enumeration guard exceeded");
    std::vector<LinearMap> aut_maps;
    aut_maps.reserve(auts.size());
    for (const auto& a : auts) aut_maps.push_back(a.as_linear_map(q));

    std::set<std::vector<int>> seen;
    std::vector<LinearMap> out;
    enumerate_n_set(
        g, q,
        [&](const LinearMap& m) {
            for (const auto& pm : aut_maps) {
                LinearMap t = compose(pm, m);  // T_phi after m
                if (seen.insert(encode_map(t)).second) out.push_back(std::move(t));
            }
        },
        guard);
    return out;
}

std::int64_t group_order(const Digraph& g, int q) {
    auto comps = strongly_connected_components(g);
    int max_clique = 0;
    for (const auto& c : comps) max_clique = std::max(max_clique, static_cast<int>(c.size()));
    if (max_clique <= 1 || (q == 2 && max_clique <= 2)) return aut_times_n(g, q);
    return static_cast<std::int64_t>(enumerate_isometries(g, q).size());
}

}  // namespace gmet
