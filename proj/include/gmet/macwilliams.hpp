#ifndef GMET_MACWILLIAMS_HPP
#define GMET_MACWILLIAMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gmet/canonical.hpp"
#include "gmet/digraph.hpp"
#include "gmet/fq.hpp"

namespace gmet {

/// Exact codeword counts by G-weight: coeffs[i] = |{c in C : w_G(c) = i}|.
struct WeightEnumerator {
    std::vector<std::int64_t> coeffs;  // A_0 .. A_n

    std::int64_t total() const;
    bool operator==(const WeightEnumerator&) const = default;
};

WeightEnumerator weight_enumerator(const Digraph& g, const LinearCode& c, std::int64_t guard = std::int64_t{1} << 24);

enum class Prediction { holds, fails, undetermined };

struct UdpWitness {
    int level = 0;               // 1-based
    std::vector<int> s1, s2;     // reduced vertices, equal L-sums
    std::vector<int> ls1, ls2;   // their L-multisets, sorted
};
struct UdpResult {
    bool holds = true;
    std::optional<UdpWitness> witness;
};
/// Within every level, equal L-sums of subsets must force equal L-multisets.
UdpResult udp_check(const ReducedForm& r, int guard_level_size = 20);

struct OmegaWitness {
    int level = 0;  // 1-based
    int l_value = 0;
    std::vector<int> vertices;  // three or more reduced vertices sharing l_value
};
struct OmegaResult {
    bool holds = true;
    std::optional<OmegaWitness> witness;
};
/// Per level, at most two reduced vertices may share any L-value > 1.
OmegaResult omega_check(const ReducedForm& r);

struct IdentityWitness {
    LinearCode c1, c2;            // equal G-enumerators
    WeightEnumerator enumerator;  // their common enumerator
    WeightEnumerator dual1, dual2;
};
struct IdentityResult {
    bool holds = true;
    std::optional<IdentityWitness> witness;
};
/// Over all q = 2 codes of dimension <= max_dim: equal W^G forces equal
/// reverse-graph enumerators of the duals.
IdentityResult identity_check(const Digraph& g, int max_dim = 2, int guard_n = 6);

/// The prediction of the hierarchical-poset theorem: UDP decides the identity.
Prediction identity_predicted(const Digraph& g);

/// Sum of (-1)^{x . y} over all y with <supp(y)>_G = jc. q = 2 only.
std::int64_t character_sum(const Digraph& g, const FqVector& x, const SupportSet& jc, int guard_n = 24);

/// Product closed form of the same sum; requires a single-level reduced form.
std::int64_t character_sum_closed_form(const Digraph& g, const FqVector& x, const SupportSet& jc);

/// MacWilliams transform for single-level graphs satisfying the UDP:
/// A_j(dual) = (1/|C|) sum_i A_i(C) p_ij with p_ij aggregated over all closed
/// sets of each cardinality.
WeightEnumerator dual_enumerator_1level(const Digraph& g, const WeightEnumerator& w, std::int64_t code_size);

struct ExtensionWitness {
    LinearCode c1, c2;
    std::vector<FqVector> basis;   // basis of c1
    std::vector<FqVector> images;  // images under the non-extendable map
};
struct ExtensionResult {
    bool holds = true;
    std::optional<ExtensionWitness> witness;
};
/// Every G-weight-preserving linear bijection between codes of dimension
/// <= dim_cap must extend to a full linear isometry. q = 2 only.
ExtensionResult extension_check(const Digraph& g, int dim_cap = 2, int guard_n = 6);

/// The prediction of the extension theorem: UDP plus per-level condition Omega.
Prediction extension_predicted(const Digraph& g);

}  // namespace gmet

#endif
