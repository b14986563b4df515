#include "gmet/fq.hpp"

#include <stdexcept>

#include "gmet/errors.hpp"

namespace gmet {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

namespace {

void check_prime(int q) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
}

void check_entries(int q, const std::vector<int>& e) {
    for (int x : e)
        if (x < 0 || x >= q) throw std::out_of_range("entry not a residue mod q");
}

}  // namespace

FqVector::FqVector(int q_, std::vector<int> e) : q(q_), entries(std::move(e)) {
    check_prime(q);
    check_entries(q, entries);
}

FqVector FqVector::zero(int q, int n) { return FqVector(q, std::vector<int>(n, 0)); }

FqVector FqVector::from_mask(std::uint64_t m, int n) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) e[i] = 1;
    return FqVector(2, std::move(e));
}

bool FqVector::is_zero() const {
    for (int x : entries)
        if (x) return false;
    return true;
}

SupportSet FqVector::support() const {
    std::vector<int> idx;
    for (int i = 0; i < n(); ++i)
        if (entries[i]) idx.push_back(i);
    return SupportSet(std::move(idx));
}

std::uint64_t FqVector::mask() const {
    if (q != 2 || n() > 64) throw std::invalid_argument("mask form requires q = 2, n <= 64");
    std::uint64_t m = 0;
    for (int i = 0; i < n(); ++i)
        if (entries[i]) m |= std::uint64_t{1} << i;
    return m;
}

namespace {

void check_same_space(const FqVector& x, const FqVector& y) {
    if (x.q != y.q) throw std::invalid_argument("mixed moduli");
    if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

FqVector add(const FqVector& x, const FqVector& y) {
    check_same_space(x, y);
    FqVector z = x;
    for (int i = 0; i < z.n(); ++i) z.entries[i] = (x.entries[i] + y.entries[i]) % x.q;
    return z;
}

FqVector sub(const FqVector& x, const FqVector& y) {
    check_same_space(x, y);
    FqVector z = x;
    for (int i = 0; i < z.n(); ++i) z.entries[i] = (x.entries[i] - y.entries[i] + x.q) % x.q;
    return z;
}

FqVector scale(int c, const FqVector& x) {
    c %= x.q;
    if (c < 0) c += x.q;
    FqVector z = x;
    for (int i = 0; i < z.n(); ++i) z.entries[i] = c * x.entries[i] % x.q;
    return z;
}

int mod_inverse(int a, int q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) throw SingularMap("no inverse of 0");
    // extended Euclid
    int t = 0, new_t = 1, r = q, new_r = a;
    while (new_r != 0) {
        int quot = r / new_r;
        int tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw SingularMap("not invertible mod q");
    return t < 0 ? t + q : t;
}

LinearMap::LinearMap(int q_, std::vector<std::vector<int>> m) : q(q_), matrix(std::move(m)) {
    check_prime(q);
    for (const auto& r : matrix) {
        if (r.size() != matrix.size()) throw std::invalid_argument("matrix must be square");
        check_entries(q, r);
    }
}

LinearMap LinearMap::identity(int q, int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return LinearMap(q, std::move(m));
}

FqVector apply(const LinearMap& t, const FqVector& x) {
    if (t.q != x.q) throw std::invalid_argument("mixed moduli");
    if (t.n() != x.n()) throw std::invalid_argument("dimension mismatch");
    const int n = t.n(), q = t.q;
    std::vector<int> y(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!x.entries[i]) continue;
        const int c = x.entries[i];
        for (int j = 0; j < n; ++j) y[j] = (y[j] + c * t.matrix[i][j]) % q;
    }
    return FqVector(x.q, std::move(y));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (f.q != g.q) throw std::invalid_argument("mixed moduli");
    if (f.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    // row convention: x . M_g . M_f, so M = M_g * M_f
    const int n = f.n(), q = f.q;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int a = g.matrix[i][k];
            if (!a) continue;
            for (int j = 0; j < n; ++j) m[i][j] = (m[i][j] + a * f.matrix[k][j]) % q;
        }
    return LinearMap(q, std::move(m));
}

namespace {

// Gauss-Jordan on a copy; returns rank, optionally accumulating the inverse.
int eliminate(std::vector<std::vector<int>>& m, int q, std::vector<std::vector<int>>* inv) {
    const int n = static_cast<int>(m.size());
    if (inv) *inv = LinearMap::identity(q, n).matrix;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        if (inv) std::swap((*inv)[pivot], (*inv)[rank]);
        const int s = mod_inverse(m[rank][col], q);
        for (int j = 0; j < n; ++j) m[rank][j] = m[rank][j] * s % q;
        if (inv)
            for (int j = 0; j < n; ++j) (*inv)[rank][j] = (*inv)[rank][j] * s % q;
        for (int r = 0; r < n; ++r) {
            if (r == rank || !m[r][col]) continue;
            const int c = m[r][col];
            for (int j = 0; j < n; ++j) m[r][j] = (m[r][j] - c * m[rank][j] % q + q) % q;
            if (inv)
                for (int j = 0; j < n; ++j) (*inv)[r][j] = ((*inv)[r][j] - c * (*inv)[rank][j] % q + q) % q;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool is_invertible(const LinearMap& t) {
    auto m = t.matrix;
    return eliminate(m, t.q, nullptr) == t.n();
}

LinearMap invert(const LinearMap& t) {
    auto m = t.matrix;
    std::vector<std::vector<int>> inv;
    if (eliminate(m, t.q, &inv) != t.n()) throw SingularMap("map is singular");
    return LinearMap(t.q, std::move(inv));
}

LinearCode rref(int q, int n, const std::vector<std::vector<int>>& rows) {
    check_prime(q);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("inconsistent row widths");
        check_entries(q, r);
    }
    std::vector<std::vector<int>> m = rows;
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        const int s = mod_inverse(m[rank][col], q);
        for (int j = 0; j < n; ++j) m[rank][j] = m[rank][j] * s % q;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || !m[r][col]) continue;
            const int c = m[r][col];
            for (int j = 0; j < n; ++j) m[r][j] = (m[r][j] - c * m[rank][j] % q + q) % q;
        }
        ++rank;
    }
    m.resize(rank);
    LinearCode code;
    code.q = q;
    code.n = n;
    code.basis = std::move(m);
    return code;
}

LinearCode rref(const std::vector<FqVector>& rows, int n_hint) {
    if (rows.empty()) {
        if (n_hint < 0) throw std::invalid_argument("cannot infer space from empty row set");
        return rref(2, n_hint, {});
    }
    const int q = rows.front().q;
    const int n = rows.front().n();
    std::vector<std::vector<int>> raw;
    for (const auto& r : rows) {
        if (r.q != q) throw std::invalid_argument("mixed moduli");
        if (r.n() != n) throw std::invalid_argument("inconsistent row widths");
        raw.push_back(r.entries);
    }
    return rref(q, n, raw);
}

LinearCode dual_code(const LinearCode& c) {
    const int n = c.n, q = c.q, k = c.k();
    std::vector<int> pivot_cols;
    std::vector<bool> is_pivot(n, false);
    for (const auto& row : c.basis) {
        int p = 0;
        while (p < n && !row[p]) ++p;
        pivot_cols.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<std::vector<int>> rows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<int> y(n, 0);
        y[f] = 1;
        for (int i = 0; i < k; ++i) y[pivot_cols[i]] = (q - c.basis[i][f]) % q;
        rows.push_back(std::move(y));
    }
    return rref(q, n, rows);
}

void for_each_codeword(const LinearCode& c, const std::function<void(const FqVector&)>& fn, std::int64_t guard) {
    const int k = c.k();
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= c.q;
        if (total > guard) throw EnumerationTooLarge("q^k exceeds enumeration guard");
    }
    std::vector<int> coeff(k, 0);
    FqVector w = FqVector::zero(c.q, c.n);
    for (std::int64_t it = 0;; ++it) {
        fn(w);
        int pos = k - 1;
        while (pos >= 0 && coeff[pos] == c.q - 1) {
            // stepping this digit back to 0 removes (q-1) copies of basis row pos
            for (int j = 0; j < c.n; ++j) w.entries[j] = (w.entries[j] + c.basis[pos][j]) % c.q;
            coeff[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++coeff[pos];
        for (int j = 0; j < c.n; ++j) w.entries[j] = (w.entries[j] + c.basis[pos][j]) % c.q;
    }
}

std::vector<FqVector> codewords(const LinearCode& c, std::int64_t guard) {
    std::vector<FqVector> out;
    for_each_codeword(c, [&](const FqVector& w) { out.push_back(w); }, guard);
    return out;
}

std::vector<std::uint64_t> codeword_masks(const LinearCode& c, std::int64_t guard) {
    if (c.q != 2 || c.n > 64) throw std::invalid_argument("codeword_masks requires q = 2, n <= 64");
    const int k = c.k();
    if (k > 62 || (std::int64_t{1} << k) > guard) throw EnumerationTooLarge("2^k exceeds enumeration guard");
    std::vector<std::uint64_t> basis_masks(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < c.n; ++j)
            if (c.basis[i][j]) basis_masks[i] |= std::uint64_t{1} << j;
    std::vector<std::uint64_t> out(std::size_t{1} << k, 0);
    // Gray-order-free: index bits select basis rows; bit i of the index = coefficient of row (k-1-i)
    // matches the odometer order used by for_each_codeword.
    for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i)
            if ((idx >> (k - 1 - i)) & 1) m ^= basis_masks[i];
        out[idx] = m;
    }
    return out;
}

}  // namespace gmet
