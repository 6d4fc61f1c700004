#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "grouplike_kit/error.hpp"
#include "grouplike_kit/scalar.hpp"

namespace gk {

template <class K>
using Vec = std::vector<K>;

/// Dense matrix over an exact scalar field.  The shape is fixed at
/// construction; entries are mutable only through at().
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, K(0)) {
        if (rows < 0 || cols < 0) throw InputError("negative matrix shape");
    }
    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw InputError("ragged matrix initializer");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }
    friend Matrix operator*(const K& s, const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const K& bkj = b.at(k, j);
                    if (is_zero(bkj)) continue;
                    c.at(i, j) = c.at(i, j) + aik * bkj;
                }
            }
        return c;
    }

    Vec<K> apply(const Vec<K>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw PreconditionError("matrix/vector shape mismatch");
        Vec<K> y(rows_, K(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (is_zero(at(i, j)) || is_zero(x[j])) continue;
                y[i] = y[i] + at(i, j) * x[j];
            }
        return y;
    }

    bool is_zero_matrix() const {
        for (const auto& v : data_)
            if (!is_zero(v)) return false;
        return true;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw PreconditionError("matrix shape mismatch");
    }
    int rows_, cols_;
    std::vector<K> data_;
};

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
    Vec<K> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw PreconditionError("vector length mismatch");
    Vec<K> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

template <class K>
Vec<K> vec_scale(const K& s, const Vec<K>& a) {
    Vec<K> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}

template <class K>
bool vec_is_zero(const Vec<K>& a) {
    for (const auto& v : a)
        if (!is_zero(v)) return false;
    return true;
}

template <class K>
Vec<K> unit_vec(int n, int i, K value = K(1)) {
    Vec<K> v(n, K(0));
    v[i] = std::move(value);
    return v;
}

}  // namespace gk
