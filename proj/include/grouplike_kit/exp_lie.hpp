#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <vector>

#include "grouplike_kit/fdalgebra.hpp"

namespace gk {

/// [x, y] = xy - yx.
template <class K>
Element<K> bracket(const Element<K>& x, const Element<K>& y) {
    return x * y - y * x;
}

/// Least m <= dim with a^m = 0, or nullopt when a is not nilpotent.  The
/// minimal polynomial has degree <= dim, so dim steps decide.
template <class K>
std::optional<int> nilpotency_index(const Element<K>& a) {
    Element<K> pw = a;
    for (int m = 1; m <= a.algebra()->dim(); ++m) {
        if (pw.is_zero_element()) return m;
        pw = pw * a;
    }
    return std::nullopt;
}

/// exp(a) = sum a^n / n! — exact, terminating because a is nilpotent.
template <class K>
Element<K> exp_exact(const Element<K>& a) {
    std::optional<int> m = nilpotency_index(a);
    if (!m) throw PreconditionError("exp_exact needs a nilpotent element");
    Element<K> sum = algebra_unit(a.algebra());
    Element<K> term = algebra_unit(a.algebra());
    Rational factorial(1);
    for (int i = 1; i < *m; ++i) {
        term = term * a;
        factorial *= i;
        sum = sum + FieldTraits<K>::from_rational(Rational(1) / factorial) * term;
    }
    return sum;
}

/// log(u) = sum (-1)^{n+1} (u-1)^n / n for unipotent u — the exact local
/// inverse of exp_exact.
template <class K>
Element<K> log_unipotent(const Element<K>& u) {
    Element<K> x = u - algebra_unit(u.algebra());
    std::optional<int> m = nilpotency_index(x);
    if (!m) throw PreconditionError("log_unipotent needs u with u-1 nilpotent");
    Element<K> sum = zero_element(u.algebra());
    Element<K> term = algebra_unit(u.algebra());
    for (int n = 1; n < *m; ++n) {
        term = term * x;
        K coeff = FieldTraits<K>::from_rational(Rational(n % 2 == 1 ? 1 : -1, n));
        sum = sum + coeff * term;
    }
    return sum;
}

namespace detail {

// Dense double/complex<double> matrix helpers for the numeric exponential.
template <class T>
struct DenseMat {
    int n = 0;
    std::vector<T> d;
    explicit DenseMat(int n_) : n(n_), d(static_cast<std::size_t>(n_) * n_, T(0)) {}
    T& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
    const T& at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    static DenseMat identity(int n_) {
        DenseMat m(n_);
        for (int i = 0; i < n_; ++i) m.at(i, i) = T(1);
        return m;
    }
};

template <class T>
DenseMat<T> dmul(const DenseMat<T>& a, const DenseMat<T>& b) {
    DenseMat<T> c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            T aik = a.at(i, k);
            if (aik == T(0)) continue;
            for (int j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

template <class T>
double one_norm(const DenseMat<T>& a) {
    double best = 0;
    for (int j = 0; j < a.n; ++j) {
        double s = 0;
        for (int i = 0; i < a.n; ++i) s += std::abs(a.at(i, j));
        best = std::max(best, s);
    }
    return best;
}

// Solves A X = B in place by LU with partial pivoting.
template <class T>
DenseMat<T> dsolve(DenseMat<T> a, DenseMat<T> b) {
    const int n = a.n;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
        if (std::abs(a.at(piv, k)) == 0.0) throw InternalError("singular matrix in Pade solve");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(piv, j));
                std::swap(b.at(k, j), b.at(piv, j));
            }
        for (int i = k + 1; i < n; ++i) {
            T f = a.at(i, k) / a.at(k, k);
            if (f == T(0)) continue;
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (int j = 0; j < n; ++j) b.at(i, j) -= f * b.at(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        for (int j = 0; j < n; ++j) {
            T s = b.at(k, j);
            for (int i = k + 1; i < n; ++i) s -= a.at(k, i) * b.at(i, j);
            b.at(k, j) = s / a.at(k, k);
        }
    }
    return b;
}

/// Matrix exponential by scaling-and-squaring with the degree-13 Pade
/// approximant (Higham's constants).
template <class T>
DenseMat<T> expm(DenseMat<T> a) {
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const double theta13 = 5.371920351148152;
    int s = 0;
    double norm = one_norm(a);
    if (norm > theta13) {
        s = static_cast<int>(std::ceil(std::log2(norm / theta13)));
        double scale = std::ldexp(1.0, -s);
        for (auto& v : a.d) v *= scale;
    }
    const int n = a.n;
    DenseMat<T> a2 = dmul(a, a);
    DenseMat<T> a4 = dmul(a2, a2);
    DenseMat<T> a6 = dmul(a4, a2);
    DenseMat<T> id = DenseMat<T>::identity(n);
    auto lin = [&](double c6, double c4, double c2, double c0) {
        DenseMat<T> m(n);
        for (std::size_t i = 0; i < m.d.size(); ++i)
            m.d[i] = T(c6) * a6.d[i] + T(c4) * a4.d[i] + T(c2) * a2.d[i] + T(c0) * id.d[i];
        return m;
    };
    DenseMat<T> w = dmul(a6, lin(b[13], b[11], b[9], 0.0));
    for (std::size_t i = 0; i < w.d.size(); ++i)
        w.d[i] += T(b[7]) * a6.d[i] + T(b[5]) * a4.d[i] + T(b[3]) * a2.d[i] + T(b[1]) * id.d[i];
    DenseMat<T> u = dmul(a, w);
    DenseMat<T> v = dmul(a6, lin(b[12], b[10], b[8], 0.0));
    for (std::size_t i = 0; i < v.d.size(); ++i)
        v.d[i] += T(b[6]) * a6.d[i] + T(b[4]) * a4.d[i] + T(b[2]) * a2.d[i] + T(b[0]) * id.d[i];
    DenseMat<T> num(n), den(n);
    for (std::size_t i = 0; i < num.d.size(); ++i) {
        num.d[i] = v.d[i] + u.d[i];
        den.d[i] = v.d[i] - u.d[i];
    }
    DenseMat<T> r = dsolve(std::move(den), std::move(num));
    for (int i = 0; i < s; ++i) r = dmul(r, r);
    return r;
}

}  // namespace detail

/// Floating-point coefficients of an element, tagged with the precision
/// they were produced at and a crude error-bound estimate.
template <class K>
struct NumericElement {
    AlgebraPtr<K> algebra;
    std::vector<typename FieldTraits<K>::NumericType> coeffs;
    double precision = 0;
    double error_bound = 0;
};

inline constexpr double kMinExpPrecision = 1e-15;

/// exp(a) through the matrix exponential of L_a applied to the unit vector
/// (exp(L_a) 1 = exp(a)); scaling-and-squaring + Pade at double precision.
template <class K>
NumericElement<K> exp_numeric(const Element<K>& a, double precision = 1e-12) {
    using T = typename FieldTraits<K>::NumericType;
    if (!(precision >= kMinExpPrecision))
        throw PreconditionError("requested precision is below the double-precision floor");
    const int n = a.algebra()->dim();
    Matrix<K> l = left_regular(a);
    detail::DenseMat<T> dl(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dl.at(i, j) = FieldTraits<K>::to_numeric(l.at(i, j));
    detail::DenseMat<T> e = detail::expm(std::move(dl));
    std::vector<T> coeffs(n, T(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) coeffs[i] += e.at(i, j) * FieldTraits<K>::to_numeric(a.algebra()->unit()[j]);
    return {a.algebra(), std::move(coeffs), precision, precision};
}

/// Numeric product through the structure tensor, for checking one-parameter
/// identities on NumericElements.
template <class K>
NumericElement<K> numeric_multiply(const NumericElement<K>& x, const NumericElement<K>& y) {
    using T = typename FieldTraits<K>::NumericType;
    if (x.algebra != y.algebra) throw PreconditionError("algebra mismatch between numeric elements");
    const auto& st = x.algebra->structure();
    std::vector<T> out(st.dim(), T(0));
    for (int i = 0; i < st.dim(); ++i)
        for (int j = 0; j < st.dim(); ++j) {
            T xy = x.coeffs[i] * y.coeffs[j];
            if (xy == T(0)) continue;
            for (const auto& [k, c] : st.product(i, j)) out[k] += xy * FieldTraits<K>::to_numeric(c);
        }
    return {x.algebra, std::move(out), std::min(x.precision, y.precision),
            std::max(x.error_bound, y.error_bound)};
}

}  // namespace gk
