#ifndef GMET_CODES_HPP
#define GMET_CODES_HPP

#include <cstdint>
#include <vector>

#include "gmet/canonical.hpp"
#include "gmet/digraph.hpp"
#include "gmet/fq.hpp"

namespace gmet {

/// Indices of supp(x) whose pi-image is maximal in pi(supp(x)).
SupportSet max_set(const ReducedForm& r, const FqVector& x);

/// x with every non-maximal coordinate zeroed.
FqVector cleared_form(const ReducedForm& r, const FqVector& x);

/// Minimal subset of x with the same closure; greedy removal in index order.
SupportSet msg(const Digraph& g, const SupportSet& x);

int min_distance(const Digraph& g, const LinearCode& c, std::int64_t guard = std::int64_t{1} << 24);

/// Largest r with pairwise disjoint radius-r balls around codewords.
/// Zero code: vacuously n. By translation invariance only pairs (0, c) are scanned.
int packing_radius_bruteforce(const Digraph& g, const LinearCode& c, std::int64_t guard = std::int64_t{1} << 22);

struct DecomposedCode {
    LinearMap isometry;                  // witness T with T(C) = direct sum of the components
    std::vector<LinearCode> components;  // components[i] supported inside level-(i+1) vertices
};

/// G-canonical decomposition for hierarchical graphs; throws NotHierarchical.
DecomposedCode canonical_decomposition(const Digraph& g, const LinearCode& c);

/// A one-dimensional code span{e_j + e_k} that admits no canonical
/// decomposition; defined for non-hierarchical graphs only.
LinearCode non_decomposable_witness(const Digraph& g, int q = 2);

/// Closed-form packing radius for hierarchical, level-constant-L graphs.
/// Throws NotApplicable when the preconditions fail, ZeroCode on k = 0.
int packing_radius_formula(const Digraph& g, const LinearCode& c, std::int64_t guard = std::int64_t{1} << 22);

}  // namespace gmet

#endif
