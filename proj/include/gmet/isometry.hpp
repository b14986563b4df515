#ifndef GMET_ISOMETRY_HPP
#define GMET_ISOMETRY_HPP

#include <cstdint>
#include <vector>

#include "gmet/digraph.hpp"
#include "gmet/fq.hpp"

namespace gmet {

/// Coordinate permutation T(x)_i = x_{perm[i]}; as a basis map it sends
/// e_k to e_{perm^{-1}(k)}.
struct PermutationIsometry {
    std::vector<int> perm;

    int n() const { return static_cast<int>(perm.size()); }
    LinearMap as_linear_map(int q) const;
    std::vector<int> inverse() const;

    bool operator==(const PermutationIsometry&) const = default;
};

/// N(G) membership: nonzero diagonal, off-diagonal support inside domination,
/// and the map is invertible.
bool respects_domination(const Digraph& g, const LinearMap& t);

/// All automorphisms of the expanded form, by backtracking with degree and
/// closure-size pruning. Guarded by vertex count.
std::vector<PermutationIsometry> aut_expanded(const Digraph& g, int guard_n = 10);

/// d_G(x, y) = d_G(T x, T y) for all x, y. Brute force when q^n fits the
/// guard, otherwise decided through decompose_isometry.
bool is_isometry(const Digraph& g, const LinearMap& t, std::int64_t guard = std::int64_t{1} << 20);

struct IsometryDecomposition {
    PermutationIsometry phi;
    LinearMap nmap;
};

/// Split t into T_phi o m with phi an automorphism of the expanded form and
/// m respecting domination. Throws NotAnIsometry when impossible.
IsometryDecomposition decompose_isometry(const Digraph& g, const LinearMap& t);

/// |N(G)|: enumerated clique-block-wise; closed form (q-1)^n q^{sum(|<v>|-1)}
/// when the expanded form is acyclic.
std::int64_t n_group_count(const Digraph& g, int q);

/// Number of matrices respecting domination on an r-clique (diag nonzero,
/// everything else free, invertible).
std::int64_t clique_block_count(int r, int q);

/// Exact |GL(n,G)_q|. Uses |Aut| * |N| where that product is exact (acyclic
/// expanded form at any q; cliques of size <= 2 at q = 2), and falls back to
/// deduplicated enumeration of the products T_phi o m otherwise.
std::int64_t group_order(const Digraph& g, int q);

/// |Aut(expanded)| * |N(G)| without deduplication.
std::int64_t aut_times_n(const Digraph& g, int q);

/// The full isometry group, materialised as deduplicated products T_phi o m.
std::vector<LinearMap> enumerate_isometries(const Digraph& g, int q, std::int64_t guard = std::int64_t{1} << 22);

}  // namespace gmet

#endif
