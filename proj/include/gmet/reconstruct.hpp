#ifndef GMET_RECONSTRUCT_HPP
#define GMET_RECONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gmet/digraph.hpp"
#include "gmet/metric.hpp"

namespace gmet {

/// Answers G-weight queries from a hidden graph or a stored table, counting queries.
class WeightOracle {
public:
    explicit WeightOracle(Digraph g);
    WeightOracle(int n, WeightTable table);

    int n() const { return n_; }
    int query(const SupportSet& s);
    std::int64_t queries() const { return count_; }

private:
    int n_;
    std::optional<Digraph> graph_;
    WeightTable table_;
    std::int64_t count_ = 0;
};

/// Expanded canonical form of the hidden graph from the n + C(n,2) weights of
/// Hamming-weight-1 and -2 words. Throws InconsistentOracle on bad answers.
Digraph infer_from_weight12(WeightOracle& oracle);

/// Completes a table holding all singletons and all pairs except a matching.
WeightTable recover_matching_weights(const WeightTable& partial);

/// D(n) = ceil(n/2) + C(n,2)
std::int64_t d_of_n(int n);

struct LowerBoundWitness {
    Digraph g1, g2;
    SupportSet s1, s2;  // the only supports where the two weight tables differ
};
LowerBoundWitness lower_bound_witness(int n);

using Certificate = std::vector<std::pair<SupportSet, int>>;

/// At most 2n-1 weight entries that pin the metric down uniquely.
Certificate certificate(const Digraph& g);

/// True iff exactly one expanded form is consistent with the entries,
/// by scanning all 2^{n(n-1)} graphs. Guarded at n <= 5.
bool verify_certificate(const Certificate& cert, int n);

struct MBounds {
    std::int64_t m_min;
    std::int64_t m_max_lower;
    std::int64_t m_max_upper;
};
MBounds m_bounds(int n);

struct ConsistencyResult {
    bool ok = true;
    std::optional<SupportSet> witness;
    int expected = 0;  // weight in the graph, valid when !ok
    int found = 0;     // weight in the table, valid when !ok
};
ConsistencyResult consistency_check(const Digraph& g, const WeightTable& t);

}  // namespace gmet

#endif
