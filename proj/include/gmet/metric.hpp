#ifndef GMET_METRIC_HPP
#define GMET_METRIC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gmet/canonical.hpp"
#include "gmet/digraph.hpp"
#include "gmet/fq.hpp"

namespace gmet {

/// Map from supports (as masks) to weights. May be total (all 2^n) or partial.
struct WeightTable {
    int n = 0;
    std::map<std::uint64_t, int> weights;

    bool is_total() const { return n <= 62 && weights.size() == (std::uint64_t{1} << n); }
    bool has(std::uint64_t m) const { return weights.count(m) != 0; }
    int at(std::uint64_t m) const;
};

/// w_G(x) = |<supp(x)>_G|
int g_weight(const Digraph& g, const SupportSet& s);
int g_weight(const Digraph& g, const FqVector& x);

int g_distance(const Digraph& g, const FqVector& x, const FqVector& y);

/// Weight read off the reduced form: sum of L over the closure of pi(s) in the Hasse graph.
int g_weight_reduced(const ReducedForm& r, const SupportSet& s);

/// All words of given G-weight (q^n enumeration guard).
std::vector<FqVector> sphere(const Digraph& g, int radius, int q, std::int64_t guard = std::int64_t{1} << 24);
std::vector<SupportSet> sphere_supports(const Digraph& g, int radius, std::int64_t guard = std::int64_t{1} << 24);

WeightTable full_weight_table(const Digraph& g, int max_n = 24);

/// weights indexed by support mask, size 2^n (n <= max_n).
std::vector<int> weight_vector(const Digraph& g, int max_n = 24);

}  // namespace gmet

#endif
