#include "gmet/macwilliams.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gmet/errors.hpp"
#include "gmet/isometry.hpp"
#include "gmet/metric.hpp"

namespace gmet {

std::int64_t WeightEnumerator::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

WeightEnumerator weight_enumerator(const Digraph& g, const LinearCode& c, std::int64_t guard) {
    if (c.n != g.n()) throw std::invalid_argument("dimension mismatch");
    WeightEnumerator e;
    e.coeffs.assign(g.n() + 1, 0);
    if (c.q == 2 && c.n <= 62) {
        auto w = weight_vector(g, 62);
        for (std::uint64_t m : codeword_masks(c, guard)) ++e.coeffs[w[m]];
    } else {
        for_each_codeword(c, [&](const FqVector& x) { ++e.coeffs[g_weight(g, x)]; }, guard);
    }
    return e;
}

UdpResult udp_check(const ReducedForm& r, int guard_level_size) {
    auto levels = r.level_sets();
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const auto& verts = levels[li];
        const int s = static_cast<int>(verts.size());
        if (s > guard_level_size) throw SearchTooLarge("level too large for UDP subset scan");
        // sum -> (sorted L-multiset, representative subset)
        std::map<int, std::pair<std::vector<int>, std::uint64_t>> seen;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << s); ++m) {
            int sum = 0;
            std::vector<int> multiset;
            for (int b = 0; b < s; ++b)
                if ((m >> b) & 1) {
                    sum += r.L[verts[b]];
                    multiset.push_back(r.L[verts[b]]);
                }
            std::sort(multiset.begin(), multiset.end());
            auto [it, fresh] = seen.emplace(sum, std::make_pair(multiset, m));
            if (!fresh && it->second.first != multiset) {
                UdpWitness w;
                w.level = static_cast<int>(li) + 1;
                for (int b = 0; b < s; ++b) {
                    if ((m >> b) & 1) w.s1.push_back(verts[b]);
                    if ((it->second.second >> b) & 1) w.s2.push_back(verts[b]);
                }
                w.ls1 = multiset;
                w.ls2 = it->second.first;
                return {false, w};
            }
        }
    }
    return {};
}

OmegaResult omega_check(const ReducedForm& r) {
    auto levels = r.level_sets();
    for (std::size_t li = 0; li < levels.size(); ++li) {
        std::map<int, std::vector<int>> by_l;
        for (int v : levels[li])
            if (r.L[v] > 1) by_l[r.L[v]].push_back(v);
        for (auto& [lv, vs] : by_l)
            if (vs.size() > 2) return {false, OmegaWitness{static_cast<int>(li) + 1, lv, vs}};
    }
    return {};
}

namespace {

// All RREF generator matrices of dimension k over F_2^n, rows as masks.
void for_each_rref_masks(int n, int k, const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<int> pivots(k);
    std::vector<std::uint64_t> rows(k);
    // iterate over k-subsets of columns as pivot sets
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    auto emit_frees = [&](auto&& self, int row, std::vector<std::uint64_t>& acc) -> void {
        if (row == k) {
            fn(acc);
            return;
        }
        // free columns of this row: non-pivot columns right of its pivot
        std::vector<int> frees;
        for (int col = pivots[row] + 1; col < n; ++col)
            if (!std::binary_search(pivots.begin(), pivots.end(), col)) frees.push_back(col);
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << frees.size()); ++f) {
            std::uint64_t row_mask = std::uint64_t{1} << pivots[row];
            for (std::size_t b = 0; b < frees.size(); ++b)
                if ((f >> b) & 1) row_mask |= std::uint64_t{1} << frees[b];
            acc[row] = row_mask;
            self(self, row + 1, acc);
        }
    };
    for (;;) {
        for (int i = 0; i < k; ++i) pivots[i] = idx[i];
        emit_frees(emit_frees, 0, rows);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

LinearCode code_from_masks(int n, const std::vector<std::uint64_t>& rows) {
    std::vector<std::vector<int>> raw;
    for (std::uint64_t m : rows) {
        std::vector<int> row(n, 0);
        for (int j = 0; j < n; ++j)
            if ((m >> j) & 1) row[j] = 1;
        raw.push_back(std::move(row));
    }
    return rref(2, n, raw);
}

std::vector<std::uint64_t> dual_masks(int n, const std::vector<std::uint64_t>& rows) {
    std::uint64_t pivot_mask = 0;
    std::vector<int> pivots;
    for (std::uint64_t m : rows) {
        int p = std::countr_zero(m);
        pivots.push_back(p);
        pivot_mask |= std::uint64_t{1} << p;
    }
    std::vector<std::uint64_t> dual;
    for (int f = 0; f < n; ++f) {
        if ((pivot_mask >> f) & 1) continue;
        std::uint64_t y = std::uint64_t{1} << f;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> f) & 1) y |= std::uint64_t{1} << pivots[i];
        dual.push_back(y);
    }
    return dual;
}

std::vector<std::int64_t> enumerator_of_masks(const std::vector<std::uint64_t>& rows, const std::vector<int>& w,
                                              int n) {
    std::vector<std::int64_t> coeffs(n + 1, 0);
    const int k = static_cast<int>(rows.size());
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << k); ++sel) {
        std::uint64_t word = 0;
        for (int i = 0; i < k; ++i)
            if ((sel >> i) & 1) word ^= rows[i];
        ++coeffs[w[word]];
    }
    return coeffs;
}

}  // namespace

IdentityResult identity_check(const Digraph& g, int max_dim, int guard_n) {
    const int n = g.n();
    if (n > guard_n) throw SearchTooLarge("identity check guard exceeded");
    if (max_dim > 3) throw SearchTooLarge("identity check dimension cap is 3");
    auto w = weight_vector(g, 62);
    auto wrev = weight_vector(reverse(g), 62);

    std::map<std::vector<std::int64_t>, std::pair<std::vector<std::uint64_t>, std::vector<std::int64_t>>> groups;
    IdentityResult res;
    for (int k = 1; k <= std::min(max_dim, n) && res.holds; ++k) {
        for_each_rref_masks(n, k, [&](const std::vector<std::uint64_t>& rows) {
            if (!res.holds) return;
            auto enumerator = enumerator_of_masks(rows, w, n);
            auto dual = dual_masks(n, rows);
            auto dual_enumerator = enumerator_of_masks(dual, wrev, n);
            auto [it, fresh] = groups.emplace(enumerator, std::make_pair(rows, dual_enumerator));
            if (!fresh && it->second.second != dual_enumerator) {
                IdentityWitness witness;
                witness.c1 = code_from_masks(n, it->second.first);
                witness.c2 = code_from_masks(n, rows);
                witness.enumerator = WeightEnumerator{enumerator};
                witness.dual1 = WeightEnumerator{it->second.second};
                witness.dual2 = WeightEnumerator{dual_enumerator};
                res = {false, witness};
            }
        });
    }
    return res;
}

Prediction identity_predicted(const Digraph& g) {
    ReducedForm r = reduced_form(g);
    if (!is_hierarchical(r)) return Prediction::undetermined;
    return udp_check(r).holds ? Prediction::holds : Prediction::fails;
}

std::int64_t character_sum(const Digraph& g, const FqVector& x, const SupportSet& jc, int guard_n) {
    if (x.q != 2) throw std::invalid_argument("character sums are exact for q = 2 only");
    if (x.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    if (!is_closed(g, jc)) throw std::invalid_argument("jc must be a closed set");
    if (jc.size() > guard_n) throw EnumerationTooLarge("character sum enumeration too large");
    const std::uint64_t jmask = jc.mask();
    const std::uint64_t xmask = x.mask();
    std::int64_t sum = 0;
    // iterate submasks of jmask, keeping those whose closure is all of jc
    std::uint64_t sub = jmask;
    for (;;) {
        if (closure_mask(g, sub) == jmask) sum += (std::popcount(sub & xmask) & 1) ? -1 : 1;
        if (sub == 0) break;
        sub = (sub - 1) & jmask;
    }
    return sum;
}

std::int64_t character_sum_closed_form(const Digraph& g, const FqVector& x, const SupportSet& jc) {
    if (x.q != 2) throw std::invalid_argument("character sums are exact for q = 2 only");
    if (x.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    ReducedForm r = reduced_form(g);
    if (r.height > 1) throw NotSingleLevel("closed form requires a single-level reduced form");
    if (!is_closed(g, jc)) throw std::invalid_argument("jc must be a closed set");

    SupportSet icl = closure(g, x.support());
    std::vector<bool> in_i(r.m, false);
    for (int v : icl) in_i[r.pi[v]] = true;
    std::vector<bool> in_j(r.m, false);
    for (int v : jc) in_j[r.pi[v]] = true;

    int sign_count = 0;
    std::int64_t product = 1;
    for (int u = 0; u < r.m; ++u) {
        if (!in_j[u]) continue;
        if (in_i[u])
            ++sign_count;
        else
            product *= (std::int64_t{1} << r.L[u]) - 1;
    }
    return (sign_count & 1) ? -product : product;
}

WeightEnumerator dual_enumerator_1level(const Digraph& g, const WeightEnumerator& w, std::int64_t code_size) {
    const int n = g.n();
    if (static_cast<int>(w.coeffs.size()) != n + 1) throw std::invalid_argument("enumerator length mismatch");
    if (code_size <= 0 || w.total() != code_size) throw std::invalid_argument("code size does not match enumerator");
    ReducedForm r = reduced_form(g);
    if (r.height > 1) throw NotSingleLevel("transform requires a single-level reduced form");
    if (!udp_check(r).holds) throw UdpViolated("graph does not satisfy the UDP");
    if (r.m > 20) throw EnumerationTooLarge("too many cliques for closed-set enumeration");

    // closed sets are unions of cliques; bucket them by cardinality
    std::vector<std::vector<std::uint64_t>> by_card(n + 1);  // clique masks
    for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << r.m); ++cm) {
        int card = 0;
        for (int u = 0; u < r.m; ++u)
            if ((cm >> u) & 1) card += r.L[u];
        by_card[card].push_back(cm);
    }

    auto closed_form = [&](std::uint64_t ci, std::uint64_t ck) {
        std::int64_t product = 1;
        for (int u = 0; u < r.m; ++u)
            if (((ck >> u) & 1) && !((ci >> u) & 1)) product *= (std::int64_t{1} << r.L[u]) - 1;
        return (std::popcount(ci & ck) & 1) ? -product : product;
    };

    WeightEnumerator out;
    out.coeffs.assign(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (int i = 0; i <= n; ++i) {
            if (!w.coeffs[i]) continue;
            if (by_card[i].empty()) throw std::invalid_argument("enumerator weight class has no closed set");
            std::uint64_t ci = by_card[i].front();  // any representative; UDP makes p_ij independent of it
            std::int64_t pij = 0;
            for (std::uint64_t ck : by_card[j]) pij += closed_form(ci, ck);
            acc += static_cast<__int128>(w.coeffs[i]) * pij;
        }
        if (acc % code_size != 0) throw Error("transform did not divide evenly");
        out.coeffs[j] = static_cast<std::int64_t>(acc / code_size);
    }
    return out;
}

namespace {

struct PairOrbits {
    int n;
    std::vector<int> parent;

    explicit PairOrbits(int n_) : n(n_), parent(std::size_t{1} << (2 * n_)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
    int id(std::uint64_t u, std::uint64_t v) { return find(static_cast<int>((u << n) | v)); }
};

}  // namespace

ExtensionResult extension_check(const Digraph& g, int dim_cap, int guard_n) {
    const int n = g.n();
    if (n > guard_n) throw SearchTooLarge("extension check guard exceeded");
    if (dim_cap > 2) throw SearchTooLarge("extension check dimension cap is 2");
    auto w = weight_vector(g, 62);

    auto isoms = enumerate_isometries(g, 2);
    const std::uint64_t space = std::uint64_t{1} << n;
    // action of each isometry on all masks
    std::vector<std::vector<std::uint64_t>> act(isoms.size(), std::vector<std::uint64_t>(space, 0));
    for (std::size_t t = 0; t < isoms.size(); ++t) {
        std::vector<std::uint64_t> rows(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (isoms[t].matrix[i][j]) rows[i] |= std::uint64_t{1} << j;
        for (std::uint64_t m = 0; m < space; ++m) {
            std::uint64_t img = 0;
            std::uint64_t rest = m;
            while (rest) {
                img ^= rows[std::countr_zero(rest)];
                rest &= rest - 1;
            }
            act[t][m] = img;
        }
    }
    PairOrbits orbits(n);
    for (std::size_t t = 0; t < isoms.size(); ++t)
        for (std::uint64_t a = 0; a < space; ++a)
            for (std::uint64_t b = 0; b < space; ++b)
                orbits.unite(static_cast<int>((a << n) | b), static_cast<int>((act[t][a] << n) | act[t][b]));

    ExtensionResult res;
    auto report = [&](const std::vector<std::uint64_t>& rows1, const std::vector<std::uint64_t>& rows2,
                      const std::vector<std::uint64_t>& basis, const std::vector<std::uint64_t>& images) {
        ExtensionWitness witness;
        witness.c1 = code_from_masks(n, rows1);
        witness.c2 = code_from_masks(n, rows2);
        for (std::uint64_t b : basis) witness.basis.push_back(FqVector::from_mask(b, n));
        for (std::uint64_t c : images) witness.images.push_back(FqVector::from_mask(c, n));
        res = {false, witness};
    };

    for (int k = 1; k <= std::min(dim_cap, n) && res.holds; ++k) {
        // group codes by their codeword weight multiset
        std::map<std::vector<int>, std::vector<std::vector<std::uint64_t>>> groups;
        for_each_rref_masks(n, k, [&](const std::vector<std::uint64_t>& rows) {
            std::vector<int> key;
            for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << k); ++sel) {
                std::uint64_t word = 0;
                for (int i = 0; i < k; ++i)
                    if ((sel >> i) & 1) word ^= rows[i];
                key.push_back(w[word]);
            }
            std::sort(key.begin(), key.end());
            groups[key].push_back(rows);
        });
        for (auto& [key, codes] : groups) {
            if (!res.holds) break;
            for (std::size_t a = 0; a < codes.size() && res.holds; ++a) {
                for (std::size_t b = a; b < codes.size() && res.holds; ++b) {
                    const auto& r1 = codes[a];
                    const auto& r2 = codes[b];
                    if (k == 1) {
                        if (w[r1[0]] != w[r2[0]]) continue;
                        if (orbits.id(r1[0], 0) != orbits.id(r2[0], 0)) report(r1, r2, {r1[0]}, {r2[0]});
                        continue;
                    }
                    // k == 2: all weight-preserving bijections basis -> basis
                    std::uint64_t words2[3] = {r2[0], r2[1], r2[0] ^ r2[1]};
                    for (int ci = 0; ci < 3 && res.holds; ++ci)
                        for (int cj = 0; cj < 3; ++cj) {
                            if (ci == cj) continue;
                            std::uint64_t c1 = words2[ci], c2 = words2[cj];
                            if (w[r1[0]] != w[c1] || w[r1[1]] != w[c2] || w[r1[0] ^ r1[1]] != w[c1 ^ c2]) continue;
                            if (orbits.id(r1[0], r1[1]) != orbits.id(c1, c2)) {
                                report(r1, r2, {r1[0], r1[1]}, {c1, c2});
                                break;
                            }
                        }
                }
            }
        }
    }
    return res;
}

Prediction extension_predicted(const Digraph& g) {
    ReducedForm r = reduced_form(g);
    if (!is_hierarchical(r)) return Prediction::undetermined;
    return udp_check(r).holds && omega_check(r).holds ? Prediction::holds : Prediction::fails;
}

}  // namespace gmet
