#ifndef GMET_CANONICAL_HPP
#define GMET_CANONICAL_HPP

#include <optional>
#include <vector>

#include "gmet/digraph.hpp"

namespace gmet {

/// Reduced canonical form: SCC condensation with Hasse (shortcut-free) edges,
/// vertex weights L = component sizes, and the level decomposition of the poset.
/// Reduced vertices are numbered by smallest contained original index, ascending.
struct ReducedForm {
    int m = 0;               // reduced vertex count
    Digraph hasse;           // acyclic, transitively reduced
    std::vector<int> L;      // size m, L[u] = |pi^{-1}(u)| >= 1
    std::vector<int> pi;     // size n, original vertex -> reduced vertex
    std::vector<int> level;  // size m, 1-based heights
    int height = 0;

    int n() const { return static_cast<int>(pi.size()); }
    /// reduced vertices of each level, levels[i] = level i+1
    std::vector<std::vector<int>> level_sets() const;
    /// original vertices of each level
    std::vector<std::vector<int>> original_level_sets() const;
};

/// Transitive closure minus self-loops: the graph with every shortcut added.
Digraph expanded_form(const Digraph& g);

/// Components ordered by smallest contained index, members ascending.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

ReducedForm reduced_form(const Digraph& g);

/// Domination between reduced vertices: b in closure of {a} in the Hasse graph.
bool dominates_reduced(const ReducedForm& r, int a, int b);

/// Every level-i vertex dominates every level-(i-1) vertex, for all i > 1.
bool is_hierarchical(const ReducedForm& r);

/// d_{g1} = d_{g2}, decided by equality of expanded forms.
bool same_metric(const Digraph& g1, const Digraph& g2);

/// Witness bijection of reduced vertices of g1 onto those of g2 preserving
/// the L-weighted Hasse structure, if one exists. Guarded brute force.
std::optional<std::vector<int>> metric_isomorphism(const Digraph& g1, const Digraph& g2, int guard_m = 12);
bool isomorphic_metrics(const Digraph& g1, const Digraph& g2, int guard_m = 12);

}  // namespace gmet

#endif
