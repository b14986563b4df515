#include "gmet/metric.hpp"

#include <bit>
#include <stdexcept>

#include "gmet/errors.hpp"

namespace gmet {

int WeightTable::at(std::uint64_t m) const {
    auto it = weights.find(m);
    if (it == weights.end()) throw MissingRequiredWeight("weight table has no entry for requested support");
    return it->second;
}

int g_weight(const Digraph& g, const SupportSet& s) {
    if (s.max_index() >= g.n()) throw std::out_of_range("support index out of range");
    return closure(g, s).size();
}

int g_weight(const Digraph& g, const FqVector& x) {
    if (x.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    return g_weight(g, x.support());
}

int g_distance(const Digraph& g, const FqVector& x, const FqVector& y) { return g_weight(g, sub(y, x)); }

int g_weight_reduced(const ReducedForm& r, const SupportSet& s) {
    if (s.max_index() >= r.n()) throw std::out_of_range("support index out of range");
    std::vector<int> proj;
    for (int v : s) proj.push_back(r.pi[v]);
    int total = 0;
    for (int u : closure(r.hasse, SupportSet(std::move(proj)))) total += r.L[u];
    return total;
}

std::vector<int> weight_vector(const Digraph& g, int max_n) {
    const int n = g.n();
    if (n > max_n || n > 62) throw EnumerationTooLarge("weight table too large");
    auto cl = vertex_closure_masks(g);
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::uint64_t> closure_of(size);
    std::vector<int> w(size);
    closure_of[0] = 0;
    w[0] = 0;
    for (std::uint64_t m = 1; m < size; ++m) {
        const int low = std::countr_zero(m);
        closure_of[m] = closure_of[m & (m - 1)] | cl[low];
        w[m] = std::popcount(closure_of[m]);
    }
    return w;
}

WeightTable full_weight_table(const Digraph& g, int max_n) {
    auto w = weight_vector(g, max_n);
    WeightTable t;
    t.n = g.n();
    for (std::uint64_t m = 0; m < w.size(); ++m) t.weights[m] = w[m];
    return t;
}

std::vector<SupportSet> sphere_supports(const Digraph& g, int radius, std::int64_t guard) {
    const int n = g.n();
    if (n > 62 || (std::int64_t{1} << n) > guard) throw EnumerationTooLarge("sphere enumeration too large");
    auto w = weight_vector(g, 62);
    std::vector<SupportSet> out;
    for (std::uint64_t m = 0; m < w.size(); ++m)
        if (w[m] == radius) out.push_back(SupportSet::from_mask(m));
    return out;
}

std::vector<FqVector> sphere(const Digraph& g, int radius, int q, std::int64_t guard) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    const int n = g.n();
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > guard) throw EnumerationTooLarge("sphere enumeration too large");
    }
    auto supports = sphere_supports(g, radius, guard);
    std::vector<FqVector> out;
    for (const auto& s : supports) {
        // all (q-1)^{|s|} value fills of the support
        std::vector<int> fill(s.size(), 1);
        for (;;) {
            FqVector x = FqVector::zero(q, n);
            for (int i = 0; i < s.size(); ++i) x.entries[s.items()[i]] = fill[i];
            out.push_back(std::move(x));
            int pos = s.size() - 1;
            while (pos >= 0 && fill[pos] == q - 1) fill[pos--] = 1;
            if (pos < 0) break;
            ++fill[pos];
        }
    }
    return out;
}

}  // namespace gmet
