#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grouplike_kit/matrix.hpp"
#include "grouplike_kit/poly.hpp"

namespace gk {

template <class K>
struct RrefResult {
    Matrix<K> mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row-echelon form with deterministic first-nonzero pivoting.
template <class K>
RrefResult<K> rref(Matrix<K> m) {
    RrefResult<K> out{std::move(m), {}, 0};
    Matrix<K>& a = out.mat;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!is_zero(a.at(i, col))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
        K inv = K(1) / a.at(row, col);
        for (int j = col; j < a.cols(); ++j) a.at(row, j) = inv * a.at(row, j);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || is_zero(a.at(i, col))) continue;
            K f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

template <class K>
int rank(const Matrix<K>& m) {
    return rref(m).rank;
}

template <class K>
struct SolveResult {
    /// Particular solution with free variables set to zero, when consistent.
    std::optional<Vec<K>> solution;
    /// Otherwise a row vector y with y*M = 0 and y*b = 1.
    std::optional<Vec<K>> certificate;
    bool consistent() const { return solution.has_value(); }
};

/// Solves M x = b exactly, or proves inconsistency with a certificate row.
template <class K>
SolveResult<K> solve(const Matrix<K>& m, const Vec<K>& b) {
    if (m.rows() != static_cast<int>(b.size()))
        throw PreconditionError("solve: shape mismatch between matrix and right-hand side");
    // Augment with b and with the identity to track row operations; the
    // transform rows certify inconsistency against the original system.
    const int n = m.rows(), c = m.cols();
    Matrix<K> aug(n, c + 1 + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, c) = b[i];
        aug.at(i, c + 1 + i) = K(1);
    }
    RrefResult<K> r = rref(std::move(aug));
    for (int i = 0; i < n; ++i) {
        bool lhs_zero = true;
        for (int j = 0; j < c; ++j)
            if (!is_zero(r.mat.at(i, j))) {
                lhs_zero = false;
                break;
            }
        if (!lhs_zero || is_zero(r.mat.at(i, c))) continue;
        K inv = K(1) / r.mat.at(i, c);
        Vec<K> cert(n);
        for (int j = 0; j < n; ++j) cert[j] = inv * r.mat.at(i, c + 1 + j);
        return {std::nullopt, std::move(cert)};
    }
    Vec<K> x(c, K(0));
    int row = 0;
    for (int col : r.pivot_cols) {
        if (col >= c) break;  // pivots inside the tracking block are consistency artifacts
        x[col] = r.mat.at(row, c);
        ++row;
    }
    return {std::move(x), std::nullopt};
}

/// Basis of the null space from the RREF free-column construction.  Empty
/// iff the matrix is injective; deterministic (free columns ascending).
template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
    RrefResult<K> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int col : r.pivot_cols) is_pivot[col] = true;
    std::vector<Vec<K>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (int row = 0; row < r.rank; ++row) v[r.pivot_cols[row]] = -r.mat.at(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <class K>
K det(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return K(1);
    Matrix<K> a = m;
    K prev(1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(a.at(k, k))) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(a.at(i, k))) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return K(0);
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = K(0);
        }
        prev = a.at(k, k);
    }
    K d = a.at(n - 1, n - 1);
    return negate ? -d : d;
}

/// Monic characteristic polynomial via the Faddeev-LeVerrier recurrence.
template <class K>
Poly<K> char_poly(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
    const int n = m.rows();
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);
    Matrix<K> acc = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix<K> shifted = acc;
            for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + c[n - k + 1];
            acc = m * shifted;
        }
        K tr(0);
        for (int i = 0; i < n; ++i) tr = tr + acc.at(i, i);
        c[n - k] = -(K(1) / K(k)) * tr;
    }
    return Poly<K>(std::move(c));
}

template <class K>
Matrix<K> eval_poly_matrix(const Poly<K>& p, const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw PreconditionError("polynomial of a non-square matrix");
    Matrix<K> acc(m.rows(), m.cols());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = m * acc;
        for (int d = 0; d < m.rows(); ++d) acc.at(d, d) = acc.at(d, d) + p.coeffs()[i];
    }
    return acc;
}

/// Incrementally maintained RREF row space; the workhorse behind spans,
/// ideals and independence checks.
template <class K>
class SpanBasis {
public:
    explicit SpanBasis(int ambient_dim) : dim_(ambient_dim) {}

    int ambient_dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec<K>>& rows() const { return rows_; }

    /// Residual of v after elimination against the current rows.
    Vec<K> reduce(Vec<K> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (is_zero(c)) continue;
            K f = c;  // rows are normalized with pivot 1
            for (int j = pivots_[r]; j < dim_; ++j) v[j] = v[j] - f * rows_[r][j];
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

    /// Inserts v; returns true when the rank grew.
    bool insert(Vec<K> v) {
        if (static_cast<int>(v.size()) != dim_) throw PreconditionError("span insert: dimension mismatch");
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < dim_; ++j)
            if (!is_zero(v[j])) {
                p = j;
                break;
            }
        if (p < 0) return false;
        K inv = K(1) / v[p];
        for (int j = p; j < dim_; ++j) v[j] = inv * v[j];
        for (auto& row : rows_) {
            if (is_zero(row[p])) continue;
            K f = row[p];
            for (int j = p; j < dim_; ++j) row[j] = row[j] - f * v[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        auto idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    /// Coordinates of v in the stored rows, if v lies in the span.
    std::optional<Vec<K>> coordinates(const Vec<K>& v) const {
        Vec<K> w = v;
        Vec<K> coords(rows_.size(), K(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            K c = w[pivots_[r]];
            if (is_zero(c)) continue;
            coords[r] = c;
            for (int j = pivots_[r]; j < dim_; ++j) w[j] = w[j] - c * rows_[r][j];
        }
        if (!vec_is_zero(w)) return std::nullopt;
        return coords;
    }

    const std::vector<int>& pivots() const { return pivots_; }

private:
    int dim_;
    std::vector<int> pivots_;
    std::vector<Vec<K>> rows_;  // kept in RREF, pivots ascending
};

/// RREF basis of the column space (the row space of the transpose).
template <class K>
std::vector<Vec<K>> column_space_basis(const Matrix<K>& m) {
    SpanBasis<K> span(m.rows());
    for (int j = 0; j < m.cols(); ++j) {
        Vec<K> col(m.rows());
        for (int i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
        span.insert(std::move(col));
    }
    return span.rows();
}

}  // namespace gk
