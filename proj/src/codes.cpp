#include "gmet/codes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gmet/errors.hpp"
#include "gmet/metric.hpp"

namespace gmet {

SupportSet max_set(const ReducedForm& r, const FqVector& x) {
    if (x.n() != r.n()) throw std::invalid_argument("dimension mismatch");
    SupportSet supp = x.support();
    std::vector<int> proj;
    for (int v : supp) proj.push_back(r.pi[v]);
    SupportSet pimg(std::move(proj));
    std::vector<int> out;
    for (int v : supp) {
        int p = r.pi[v];
        bool maximal = true;
        for (int w : pimg)
            if (w != p && dominates_reduced(r, w, p)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(v);
    }
    return SupportSet(std::move(out));
}

FqVector cleared_form(const ReducedForm& r, const FqVector& x) {
    SupportSet keep = max_set(r, x);
    FqVector y = FqVector::zero(x.q, x.n());
    for (int v : keep) y.entries[v] = x.entries[v];
    return y;
}

SupportSet msg(const Digraph& g, const SupportSet& x) {
    SupportSet target = closure(g, x);
    std::vector<int> kept(x.items());
    // drop from the highest index down, so the smallest generators survive ties
    for (auto it = x.items().rbegin(); it != x.items().rend(); ++it) {
        std::vector<int> trial;
        for (int w : kept)
            if (w != *it) trial.push_back(w);
        if (closure(g, SupportSet(trial)) == target) kept = std::move(trial);
    }
    return SupportSet(std::move(kept));
}

int min_distance(const Digraph& g, const LinearCode& c, std::int64_t guard) {
    if (c.n != g.n()) throw std::invalid_argument("dimension mismatch");
    if (c.k() == 0) throw ZeroCode("minimum distance of the zero code is undefined");
    int best = std::numeric_limits<int>::max();
    if (c.q == 2 && c.n <= 62) {
        auto w = weight_vector(g, 62);
        for (std::uint64_t m : codeword_masks(c, guard))
            if (m) best = std::min(best, w[m]);
    } else {
        for_each_codeword(
            c,
            [&](const FqVector& x) {
                if (!x.is_zero()) best = std::min(best, g_weight(g, x));
            },
            guard);
    }
    return best;
}

int packing_radius_bruteforce(const Digraph& g, const LinearCode& c, std::int64_t guard) {
    const int n = g.n();
    if (c.n != n) throw std::invalid_argument("dimension mismatch");
    if (c.k() == 0) return n;
    if (c.q == 2) {
        if (n > 62 || (std::int64_t{1} << n) > guard) throw EnumerationTooLarge("packing radius scan too large");
        auto w = weight_vector(g, 62);
        const std::uint64_t space = std::uint64_t{1} << n;
        int rad = std::numeric_limits<int>::max();
        for (std::uint64_t cm : codeword_masks(c, guard)) {
            if (!cm) continue;
            int closest = std::numeric_limits<int>::max();
            for (std::uint64_t z = 0; z < space; ++z) closest = std::min(closest, std::max(w[z], w[z ^ cm]));
            rad = std::min(rad, closest - 1);
        }
        return rad;
    }
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= c.q;
        if (total > guard) throw EnumerationTooLarge("packing radius scan too large");
    }
    LinearCode full = rref(c.q, n, LinearMap::identity(c.q, n).matrix);
    auto space = codewords(full, guard);
    int rad = std::numeric_limits<int>::max();
    for_each_codeword(
        c,
        [&](const FqVector& cw) {
            if (cw.is_zero()) return;
            int closest = std::numeric_limits<int>::max();
            for (const auto& z : space) closest = std::min(closest, std::max(g_weight(g, z), g_distance(g, cw, z)));
            rad = std::min(rad, closest - 1);
        },
        guard);
    return rad;
}

namespace {

int span_dim(int q, int n, const std::vector<FqVector>& rows) {
    std::vector<std::vector<int>> raw;
    for (const auto& r : rows) raw.push_back(r.entries);
    return rref(q, n, raw).k();
}

FqVector restrict_to_levels(const FqVector& x, const std::vector<int>& vertex_level, int max_level) {
    FqVector y = FqVector::zero(x.q, x.n());
    for (int i = 0; i < x.n(); ++i)
        if (vertex_level[i] <= max_level) y.entries[i] = x.entries[i];
    return y;
}

FqVector project_level(const FqVector& x, const std::vector<int>& vertex_level, int lvl) {
    FqVector y = FqVector::zero(x.q, x.n());
    for (int i = 0; i < x.n(); ++i)
        if (vertex_level[i] == lvl) y.entries[i] = x.entries[i];
    return y;
}

}  // namespace

DecomposedCode canonical_decomposition(const Digraph& g, const LinearCode& c) {
    const int n = g.n();
    const int q = c.q;
    if (c.n != n) throw std::invalid_argument("dimension mismatch");
    ReducedForm r = reduced_form(g);
    if (!is_hierarchical(r)) throw NotHierarchical("graph does not induce a hierarchical poset");
    const int h = std::max(r.height, 1);

    std::vector<int> vertex_level(n);
    for (int v = 0; v < n; ++v) vertex_level[v] = r.level[r.pi[v]];

    LinearMap t = LinearMap::identity(q, n);
    std::vector<std::vector<FqVector>> comps(h);

    for (const auto& row : c.basis) {
        FqVector v = apply(t, FqVector(q, row));
        int i0 = -1;
        for (int lvl = h; lvl >= 1; --lvl) {
            FqVector proj = project_level(v, vertex_level, lvl);
            auto trial = comps[lvl - 1];
            trial.push_back(proj);
            if (span_dim(q, n, trial) > static_cast<int>(comps[lvl - 1].size())) {
                i0 = lvl;
                break;
            }
        }
        if (i0 < 0) throw Error("decomposition internal error: image already inside the components");

        FqVector y = restrict_to_levels(v, vertex_level, i0);
        FqVector ytilde = project_level(y, vertex_level, i0);

        // basis-exchange isometry: y -> ytilde, fixing the level-i0 component and
        // every coordinate vector outside level i0. The completion is chosen
        // around ytilde; the same vectors complete y as well.
        std::vector<FqVector> image_rows{ytilde};
        for (const auto& f : comps[i0 - 1]) image_rows.push_back(f);
        for (int j = 0; j < n; ++j) {
            if (vertex_level[j] == i0) continue;
            FqVector e = FqVector::zero(q, n);
            e.entries[j] = 1;
            image_rows.push_back(e);
        }
        for (int j = 0; j < n && static_cast<int>(image_rows.size()) < n; ++j) {
            if (vertex_level[j] != i0) continue;
            FqVector e = FqVector::zero(q, n);
            e.entries[j] = 1;
            auto trial = image_rows;
            trial.push_back(e);
            if (span_dim(q, n, trial) == static_cast<int>(trial.size())) image_rows.push_back(std::move(e));
        }
        if (static_cast<int>(image_rows.size()) != n) throw Error("decomposition internal error: basis completion failed");
        std::vector<FqVector> basis_rows = image_rows;
        basis_rows[0] = y;

        std::vector<std::vector<int>> bm, cm;
        for (const auto& x : basis_rows) bm.push_back(x.entries);
        for (const auto& x : image_rows) cm.push_back(x.entries);
        LinearMap step = compose(LinearMap(q, cm), invert(LinearMap(q, bm)));

        t = compose(step, t);
        comps[i0 - 1].push_back(ytilde);
    }

    DecomposedCode out;
    out.isometry = t;
    int dim_total = 0;
    std::vector<FqVector> all;
    for (int lvl = 1; lvl <= h; ++lvl) {
        LinearCode comp = comps[lvl - 1].empty() ? rref(q, n, {}) : rref(comps[lvl - 1]);
        for (const auto& brow : comp.basis)
            for (int j = 0; j < n; ++j)
                if (brow[j] && vertex_level[j] != lvl) throw Error("decomposition internal error: support leaked levels");
        dim_total += comp.k();
        for (const auto& brow : comp.basis) all.emplace_back(q, brow);
        out.components.push_back(std::move(comp));
    }
    // T(C) must equal the direct sum of the components
    std::vector<FqVector> t_of_c;
    for (const auto& row : c.basis) t_of_c.push_back(apply(t, FqVector(q, row)));
    if (dim_total != c.k() || !(rref(all, n) == rref(t_of_c, n)))
        throw Error("decomposition internal error: component sum mismatch");
    return out;
}

LinearCode non_decomposable_witness(const Digraph& g, int q) {
    ReducedForm r = reduced_form(g);
    if (is_hierarchical(r)) throw NotApplicable("graph is hierarchical; every code decomposes");
    auto levels = r.level_sets();
    for (int i = 0; i + 1 < r.height; ++i) {
        for (int a : levels[i])
            for (int b : levels[i + 1])
                if (!dominates_reduced(r, b, a)) {
                    int j = -1, k = -1;
                    for (int v = 0; v < r.n(); ++v) {
                        if (r.pi[v] == a && j < 0) j = v;
                        if (r.pi[v] == b && k < 0) k = v;
                    }
                    std::vector<int> row(r.n(), 0);
                    row[j] = 1;
                    row[k] = 1;
                    return rref(q, r.n(), {row});
                }
    }
    throw Error("internal error: non-hierarchical form without a witness pair");
}

int packing_radius_formula(const Digraph& g, const LinearCode& c, std::int64_t guard) {
    if (c.n != g.n()) throw std::invalid_argument("dimension mismatch");
    if (c.k() == 0) throw ZeroCode("packing radius formula needs a nonzero code");
    ReducedForm r = reduced_form(g);
    if (!is_hierarchical(r)) throw NotApplicable("graph is not hierarchical");
    auto levels = r.level_sets();
    std::vector<int> level_L(r.height, -1);
    for (int i = 0; i < r.height; ++i) {
        for (int v : levels[i]) {
            if (level_L[i] < 0) level_L[i] = r.L[v];
            if (r.L[v] != level_L[i]) throw NotApplicable("L is not constant on every level");
        }
    }

    DecomposedCode dec = canonical_decomposition(g, c);
    int k0 = -1;
    for (int lvl = 1; lvl <= static_cast<int>(dec.components.size()); ++lvl)
        if (dec.components[lvl - 1].k() > 0) {
            k0 = lvl;
            break;
        }
    if (k0 < 0) throw Error("internal error: nonzero code with empty decomposition");

    // r0 = least |pi(supp(x))| over nonzero codewords of the level-k0 component
    const LinearCode& comp = dec.components[k0 - 1];
    int r0 = std::numeric_limits<int>::max();
    for_each_codeword(
        comp,
        [&](const FqVector& x) {
            if (x.is_zero()) return;
            std::vector<int> proj;
            for (int v : x.support()) proj.push_back(r.pi[v]);
            r0 = std::min(r0, SupportSet(std::move(proj)).size());
        },
        guard);

    int below = 0;
    for (int i = 1; i < k0; ++i) below += static_cast<int>(levels[i - 1].size()) * level_L[i - 1];
    // R = ceil(r0/2) * L(k0) + (vertices below level k0) - 1; reduces to
    // floor((r0-1)/2) * L(k0) + ... when L(k0) = 1.
    return (r0 + 1) / 2 * level_L[k0 - 1] + below - 1;
}

}  // namespace gmet
