#ifndef GMET_FQ_HPP
#define GMET_FQ_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "gmet/digraph.hpp"

namespace gmet {

bool is_prime(int q);

/// Word of F_q^n, entries are exact residues in {0..q-1}. Only prime q is supported.
struct FqVector {
    int q = 2;
    std::vector<int> entries;

    FqVector() = default;
    FqVector(int q_, std::vector<int> e);
    static FqVector zero(int q, int n);
    /// q = 2 vector from a support mask.
    static FqVector from_mask(std::uint64_t m, int n);

    int n() const { return static_cast<int>(entries.size()); }
    bool is_zero() const;
    SupportSet support() const;
    std::uint64_t mask() const;  // q = 2 only

    bool operator==(const FqVector&) const = default;
};

FqVector add(const FqVector& x, const FqVector& y);
FqVector sub(const FqVector& x, const FqVector& y);
FqVector scale(int c, const FqVector& x);

int mod_inverse(int a, int q);

/// Linear map given by the images of the basis vectors: T(e_i) = sum_j matrix[i][j] e_j.
struct LinearMap {
    int q = 2;
    std::vector<std::vector<int>> matrix;  // n x n

    LinearMap() = default;
    LinearMap(int q_, std::vector<std::vector<int>> m);
    static LinearMap identity(int q, int n);

    int n() const { return static_cast<int>(matrix.size()); }

    bool operator==(const LinearMap&) const = default;
};

FqVector apply(const LinearMap& t, const FqVector& x);
/// f after g: compose(f, g)(x) = f(g(x)).
LinearMap compose(const LinearMap& f, const LinearMap& g);
bool is_invertible(const LinearMap& t);
LinearMap invert(const LinearMap& t);  // throws SingularMap

/// k x n generator basis in reduced row-echelon form over F_q.
struct LinearCode {
    int q = 2;
    int n = 0;
    std::vector<std::vector<int>> basis;  // RREF rows, k of them

    int k() const { return static_cast<int>(basis.size()); }

    bool operator==(const LinearCode&) const = default;
    auto operator<=>(const LinearCode&) const = default;
};

/// Canonical basis of the row space; equal codes yield identical bases.
LinearCode rref(int q, int n, const std::vector<std::vector<int>>& rows);
LinearCode rref(const std::vector<FqVector>& rows, int n_hint = -1);

LinearCode dual_code(const LinearCode& c);

/// All q^k codewords, zero first, in odometer order over basis coefficients.
std::vector<FqVector> codewords(const LinearCode& c, std::int64_t guard = std::int64_t{1} << 24);
void for_each_codeword(const LinearCode& c, const std::function<void(const FqVector&)>& fn,
                       std::int64_t guard = std::int64_t{1} << 24);

/// Codeword masks for q = 2 codes with n <= 64 (same enumeration order).
std::vector<std::uint64_t> codeword_masks(const LinearCode& c, std::int64_t guard = std::int64_t{1} << 24);

}  // namespace gmet

#endif
