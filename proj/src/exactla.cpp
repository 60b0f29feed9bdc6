#include "pqdeg/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pqdeg::exactla {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged row in matrix literal");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix t(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(i, j) = -(*this)(i, j);
    return t;
}

bool IntMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

std::size_t rank_rational(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        // one Bareiss step: entries stay integral, divided by the previous pivot
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(r, col);
        ++r;
    }
    return r;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::size_t rank_mod_p(const IntMatrix& m, long long p) {
    if (p == 2) throw std::invalid_argument("rank_mod_p needs an odd prime, got 2");
    if (!is_prime(p))
        throw std::invalid_argument("rank_mod_p: " + std::to_string(p) +
                                    " is composite; use smith_normal_form and count invariant "
                                    "factors coprime to the modulus instead");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    const Int P = p;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Int e = m(i, j) % P;
            if (e < 0) e += P;
            a[i][j] = static_cast<long long>(e);
        }
    auto inv_mod = [&](long long x) {
        long long r = 1, b = x % p, e = p - 2;  // Fermat
        while (e) {
            if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % p);
            b = static_cast<long long>(static_cast<__int128>(b) * b % p);
            e >>= 1;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const long long inv = inv_mod(a[r][col]);
        for (std::size_t j = col; j < cols; ++j)
            a[r][j] = static_cast<long long>(static_cast<__int128>(a[r][j]) * inv % p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const long long f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                long long v = a[i][j] - static_cast<long long>(static_cast<__int128>(f) * a[r][j] % p);
                a[i][j] = v % p < 0 ? v % p + p : v % p;
            }
        }
        ++r;
    }
    return r;
}

namespace {

// Diagonalization by unimodular row/column operations. When `right` is given
// it accumulates the column operations, so that (input) * (*right) has the
// invariant factors on the diagonal.
std::vector<Int> snf_core(IntMatrix a, IntMatrix* right) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (right) *right = IntMatrix::identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
        if (right)
            for (std::size_t r = 0; r < cols; ++r) std::swap((*right)(r, i), (*right)(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < cols; ++c) a(dst, c) += f * a(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < rows; ++r) a(r, dst) += f * a(r, src);
        if (right)
            for (std::size_t r = 0; r < cols; ++r) (*right)(r, dst) += f * (*right)(r, src);
    };

    const std::size_t dim = std::min(rows, cols);
    for (std::size_t t = 0; t < dim; ++t) {
        // smallest non-zero |entry| of the trailing submatrix as pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                Int mag = abs(a(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = std::move(mag);
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0) add_row(i, t, -q);
                if (a(i, t) != 0) {  // remainder became the smaller pivot
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0) add_col(j, t, -q);
                if (a(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block for the chain d_t | d_{t+1}
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0)
            for (std::size_t c = t; c < cols; ++c) a(t, c) = -a(t, c);
    }

    std::vector<Int> d(dim);
    for (std::size_t t = 0; t < dim; ++t) d[t] = a(t, t);
    return d;
}

}  // namespace

std::vector<Int> smith_normal_form(const IntMatrix& m) { return snf_core(m, nullptr); }

std::vector<std::vector<Int>> kernel_basis_rational(const IntMatrix& m) {
    // fraction-free Gauss-Jordan (Montante): entries stay minors of the
    // input, so no coefficient blowup; after the sweep every pivot equals
    // the determinant of the pivot submatrix
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == col) continue;
                a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
            }
            a(i, col) = 0;
        }
        prev = a(r, col);
        pivot_cols.push_back(col);
        is_pivot[col] = true;
        ++r;
    }

    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Int> v(cols);
        v[f] = prev;
        for (std::size_t k = 0; k < r; ++k) v[pivot_cols[k]] = -a(k, f);
        Int content = 0;
        for (const Int& x : v) content = gcd(content, x);
        Int lead = 0;
        for (const Int& x : v)
            if (x != 0) {
                lead = x;
                break;
            }
        if (lead < 0) content = -content;
        for (Int& x : v) x /= content;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t count_invariant_factors_coprime_to(const IntMatrix& m, long long l) {
    if (l <= 0) throw std::invalid_argument("modulus must be positive");
    const Int L = l;
    std::size_t count = 0;
    for (const Int& d : smith_normal_form(m))
        if (d != 0 && gcd(d, L) == 1) ++count;
    return count;
}

}  // namespace pqdeg::exactla
