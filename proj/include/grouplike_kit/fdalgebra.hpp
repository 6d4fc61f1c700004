#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grouplike_kit/linalg.hpp"
#include "grouplike_kit/matrix.hpp"

namespace gk {

template <class K>
class FDAlgebra;

template <class K>
using AlgebraPtr = std::shared_ptr<const FDAlgebra<K>>;

/// Sparse structure constants: b_i * b_j = sum_k c[i][j][k] b_k, stored as
/// per-(i,j) buckets of (k, c) pairs sorted by k.
template <class K>
class StructureTensor {
public:
    explicit StructureTensor(int dim) : dim_(dim), buckets_(static_cast<std::size_t>(dim) * dim) {
        if (dim <= 0) throw InputError("algebra dimension must be positive");
    }

    int dim() const { return dim_; }

    void add(int i, int j, int k, K c) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (is_zero(c)) return;
        buckets_[static_cast<std::size_t>(i) * dim_ + j].emplace_back(k, std::move(c));
    }

    const std::vector<std::pair<int, K>>& product(int i, int j) const {
        return buckets_[static_cast<std::size_t>(i) * dim_ + j];
    }

    /// Sorts buckets by k, merges duplicates, drops zeros.
    void normalize() {
        for (auto& bucket : buckets_) {
            std::sort(bucket.begin(), bucket.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::pair<int, K>> merged;
            for (auto& [k, c] : bucket) {
                if (!merged.empty() && merged.back().first == k)
                    merged.back().second = merged.back().second + c;
                else
                    merged.emplace_back(k, std::move(c));
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& e) { return is_zero(e.second); }),
                         merged.end());
            bucket = std::move(merged);
        }
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_) throw InputError("structure tensor index out of range");
    }
    int dim_;
    std::vector<std::vector<std::pair<int, K>>> buckets_;
};

namespace detail {

template <class K>
std::vector<int> nonzero_indices(const Vec<K>& x) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i])) idx.push_back(static_cast<int>(i));
    return idx;
}

template <class K>
Vec<K> mult_coeffs(const StructureTensor<K>& st, const Vec<K>& x, const Vec<K>& y) {
    Vec<K> out(st.dim(), K(0));
    for (int i : nonzero_indices(x))
        for (int j : nonzero_indices(y)) {
            K xy = x[i] * y[j];
            for (const auto& [k, c] : st.product(i, j)) out[k] = out[k] + xy * c;
        }
    return out;
}

/// y = M x exploiting sparsity of x.
template <class K>
Vec<K> apply_sparse(const Matrix<K>& m, const Vec<K>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw PreconditionError("matrix/vector shape mismatch");
    Vec<K> y(m.rows(), K(0));
    for (int j : nonzero_indices(x))
        for (int i = 0; i < m.rows(); ++i) {
            const K& mij = m.at(i, j);
            if (is_zero(mij)) continue;
            y[i] = y[i] + mij * x[j];
        }
    return y;
}

}  // namespace detail

/// Finite-dimensional unital associative algebra given by structure
/// constants and the coefficient vector of its identity.  Associativity and
/// the unit law are verified eagerly at construction.
template <class K>
class FDAlgebra {
public:
    static AlgebraPtr<K> make(StructureTensor<K> structure, Vec<K> unit,
                              std::vector<std::string> labels = {}) {
        structure.normalize();
        const int n = structure.dim();
        if (static_cast<int>(unit.size()) != n) throw InputError("unit vector length != dimension");
        if (!labels.empty() && static_cast<int>(labels.size()) != n)
            throw InputError("label list length != dimension");

        // Unit law on every basis element.
        for (int i = 0; i < n; ++i) {
            Vec<K> e = unit_vec<K>(n, i);
            if (detail::mult_coeffs(structure, unit, e) != e ||
                detail::mult_coeffs(structure, e, unit) != e)
                throw InputError("unit law fails on basis element " + std::to_string(i));
        }
        // Associativity on all basis triples (sparse shortcuts built in).
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& ij = structure.product(i, j);
                for (int k = 0; k < n; ++k) {
                    std::map<int, K> lhs, rhs;
                    for (const auto& [m, c] : ij)
                        for (const auto& [t, d] : structure.product(m, k)) {
                            K v = c * d;
                            auto it = lhs.find(t);
                            if (it == lhs.end())
                                lhs.emplace(t, std::move(v));
                            else
                                it->second = it->second + v;
                        }
                    for (const auto& [m, c] : structure.product(j, k))
                        for (const auto& [t, d] : structure.product(i, m)) {
                            K v = c * d;
                            auto it = rhs.find(t);
                            if (it == rhs.end())
                                rhs.emplace(t, std::move(v));
                            else
                                it->second = it->second + v;
                        }
                    auto purge = [](std::map<int, K>& m2) {
                        for (auto it = m2.begin(); it != m2.end();)
                            it = is_zero(it->second) ? m2.erase(it) : std::next(it);
                    };
                    purge(lhs);
                    purge(rhs);
                    if (lhs != rhs)
                        throw InputError("associativity fails on basis triple (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
            }
        return AlgebraPtr<K>(new FDAlgebra(std::move(structure), std::move(unit), std::move(labels)));
    }

    int dim() const { return structure_.dim(); }
    const StructureTensor<K>& structure() const { return structure_; }
    const Vec<K>& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    FDAlgebra(StructureTensor<K> st, Vec<K> unit, std::vector<std::string> labels)
        : structure_(std::move(st)), unit_(std::move(unit)), labels_(std::move(labels)) {}

    StructureTensor<K> structure_;
    Vec<K> unit_;
    std::vector<std::string> labels_;
};

/// An element of a fixed algebra: a coefficient vector over its basis.
template <class K>
class Element {
public:
    Element(AlgebraPtr<K> alg, Vec<K> coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
        if (!alg_) throw InputError("element without an algebra");
        if (static_cast<int>(coeffs_.size()) != alg_->dim())
            throw InputError("coefficient length != algebra dimension");
    }

    const AlgebraPtr<K>& algebra() const { return alg_; }
    const Vec<K>& coeffs() const { return coeffs_; }
    bool is_zero_element() const { return vec_is_zero(coeffs_); }

    friend Element operator+(const Element& x, const Element& y) {
        check_same(x, y);
        return Element(x.alg_, vec_add(x.coeffs_, y.coeffs_));
    }
    friend Element operator-(const Element& x, const Element& y) {
        check_same(x, y);
        return Element(x.alg_, vec_sub(x.coeffs_, y.coeffs_));
    }
    friend Element operator*(const K& s, const Element& x) {
        return Element(x.alg_, vec_scale(s, x.coeffs_));
    }
    friend Element operator*(const Element& x, const Element& y) {
        check_same(x, y);
        return Element(x.alg_, detail::mult_coeffs(x.alg_->structure(), x.coeffs_, y.coeffs_));
    }
    friend bool operator==(const Element& x, const Element& y) {
        return x.alg_ == y.alg_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

private:
    static void check_same(const Element& x, const Element& y) {
        if (x.alg_ != y.alg_) throw PreconditionError("algebra mismatch between elements");
    }
    AlgebraPtr<K> alg_;
    Vec<K> coeffs_;
};

template <class K>
Element<K> multiply(const Element<K>& x, const Element<K>& y) {
    return x * y;
}

template <class K>
Element<K> algebra_unit(const AlgebraPtr<K>& alg) {
    return Element<K>(alg, alg->unit());
}

template <class K>
Element<K> basis_element(const AlgebraPtr<K>& alg, int i) {
    if (i < 0 || i >= alg->dim()) throw InputError("basis index out of range");
    return Element<K>(alg, unit_vec<K>(alg->dim(), i));
}

template <class K>
Element<K> zero_element(const AlgebraPtr<K>& alg) {
    return Element<K>(alg, Vec<K>(alg->dim(), K(0)));
}

template <class K>
Element<K> element_pow(Element<K> x, int e) {
    Element<K> acc = algebra_unit(x.algebra());
    for (int i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

/// Matrix of y -> x*y in the algebra basis (the left regular representation).
template <class K>
Matrix<K> left_regular(const Element<K>& x) {
    const auto& st = x.algebra()->structure();
    const int n = st.dim();
    Matrix<K> m(n, n);
    for (int i : detail::nonzero_indices(x.coeffs()))
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : st.product(i, j)) m.at(k, j) = m.at(k, j) + x.coeffs()[i] * c;
    return m;
}

/// delta(x) = det(L_x); multiplicative, and zero exactly on the non-units.
template <class K>
K delta(const Element<K>& x) {
    return det(left_regular(x));
}

template <class K>
struct InvertResult {
    std::optional<Element<K>> inverse;
    /// Nonempty exactly when x is not a unit: a kernel basis of L_x.
    std::vector<Vec<K>> kernel_witness;
    bool is_unit() const { return inverse.has_value(); }
};

/// Two-sided inverse by solving L_x v = 1, verified on both sides.
template <class K>
InvertResult<K> invert(const Element<K>& x) {
    Matrix<K> lx = left_regular(x);
    SolveResult<K> s = solve(lx, x.algebra()->unit());
    if (!s.consistent()) return {std::nullopt, kernel_basis(lx)};
    Element<K> v(x.algebra(), *s.solution);
    Element<K> one = algebra_unit(x.algebra());
    if (x * v != one || v * x != one) throw InternalError("invert produced a one-sided inverse");
    return {std::move(v), {}};
}

/// Basis of a two-sided ideal, stored as deterministic RREF rows.
template <class K>
struct IdealBasis {
    AlgebraPtr<K> algebra;
    std::vector<Vec<K>> basis;
    int rank() const { return static_cast<int>(basis.size()); }
};

/// Validates two-sided closure of the span and reduces it to RREF rows.
template <class K>
IdealBasis<K> make_ideal(const AlgebraPtr<K>& alg, const std::vector<Vec<K>>& spanning) {
    SpanBasis<K> span(alg->dim());
    for (const auto& v : spanning) {
        if (static_cast<int>(v.size()) != alg->dim()) throw InputError("ideal vector length != dimension");
        span.insert(v);
    }
    const auto& st = alg->structure();
    for (const auto& v : span.rows())
        for (int t = 0; t < alg->dim(); ++t) {
            Vec<K> e = unit_vec<K>(alg->dim(), t);
            if (!span.contains(detail::mult_coeffs(st, e, v)) ||
                !span.contains(detail::mult_coeffs(st, v, e)))
                throw InputError("span is not a two-sided ideal (fails at basis element " +
                                 std::to_string(t) + ")");
        }
    return {alg, span.rows()};
}

/// Smallest two-sided ideal containing the generators.
template <class K>
IdealBasis<K> ideal_closure(const AlgebraPtr<K>& alg, const std::vector<Vec<K>>& generators) {
    SpanBasis<K> span(alg->dim());
    for (const auto& g : generators) span.insert(g);
    const auto& st = alg->structure();
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec<K>> snapshot = span.rows();
        for (const auto& v : snapshot)
            for (int t = 0; t < alg->dim(); ++t) {
                Vec<K> e = unit_vec<K>(alg->dim(), t);
                grew |= span.insert(detail::mult_coeffs(st, e, v));
                grew |= span.insert(detail::mult_coeffs(st, v, e));
            }
    }
    return {alg, span.rows()};
}

/// A surjective algebra morphism onto a quotient together with a linear
/// section choosing coset representatives.
template <class K>
class QuotientMap {
public:
    static QuotientMap make(AlgebraPtr<K> source, AlgebraPtr<K> target, Matrix<K> proj,
                            Matrix<K> section) {
        QuotientMap q(std::move(source), std::move(target), std::move(proj), std::move(section));
        const int s = q.source_->dim(), t = q.target_->dim();
        if (q.proj_.rows() != t || q.proj_.cols() != s || q.section_.rows() != s ||
            q.section_.cols() != t)
            throw InputError("quotient map shape mismatch");
        if (q.proj_ * q.section_ != Matrix<K>::identity(t))
            throw InputError("section is not a right inverse of the projection");
        if (detail::apply_sparse(q.proj_, q.source_->unit()) != q.target_->unit())
            throw InputError("projection does not preserve the unit");
        // Multiplicativity on all basis pairs.
        std::vector<Vec<K>> img(s);
        for (int i = 0; i < s; ++i) img[i] = detail::apply_sparse(q.proj_, unit_vec<K>(s, i));
        const auto& st = q.source_->structure();
        const auto& tt = q.target_->structure();
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                Vec<K> lhs(t, K(0));
                for (const auto& [k, c] : st.product(i, j))
                    for (int r = 0; r < t; ++r) lhs[r] = lhs[r] + c * img[k][r];
                if (lhs != detail::mult_coeffs(tt, img[i], img[j]))
                    throw InputError("projection is not multiplicative at basis pair (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }
        return q;
    }

    const AlgebraPtr<K>& source() const { return source_; }
    const AlgebraPtr<K>& target() const { return target_; }
    const Matrix<K>& projection() const { return proj_; }
    const Matrix<K>& section() const { return section_; }

    Element<K> apply(const Element<K>& x) const {
        if (x.algebra() != source_) throw PreconditionError("element not in the source algebra");
        return Element<K>(target_, detail::apply_sparse(proj_, x.coeffs()));
    }
    Element<K> lift_linear(const Element<K>& b) const {
        if (b.algebra() != target_) throw PreconditionError("element not in the target algebra");
        return Element<K>(source_, detail::apply_sparse(section_, b.coeffs()));
    }

    static QuotientMap identity_map(const AlgebraPtr<K>& alg) {
        Matrix<K> id = Matrix<K>::identity(alg->dim());
        return QuotientMap(alg, alg, id, id);
    }

private:
    QuotientMap(AlgebraPtr<K> source, AlgebraPtr<K> target, Matrix<K> proj, Matrix<K> section)
        : source_(std::move(source)), target_(std::move(target)), proj_(std::move(proj)),
          section_(std::move(section)) {}

    AlgebraPtr<K> source_, target_;
    Matrix<K> proj_, section_;
};

template <class K>
struct QuotientResult {
    AlgebraPtr<K> algebra;
    QuotientMap<K> map;
};

/// A/J on the RREF pivot complement of the ideal's coordinate span.
template <class K>
QuotientResult<K> quotient(const AlgebraPtr<K>& alg, const IdealBasis<K>& ideal) {
    if (ideal.algebra != alg) throw PreconditionError("ideal belongs to a different algebra");
    const int n = alg->dim();
    if (ideal.basis.empty()) return {alg, QuotientMap<K>::identity_map(alg)};

    SpanBasis<K> span(n);
    for (const auto& v : ideal.basis) span.insert(v);
    if (span.contains(alg->unit())) throw PreconditionError("improper ideal: the unit lies in the span");

    std::vector<bool> is_pivot(n, false);
    for (int p : span.pivots()) is_pivot[p] = true;
    std::vector<int> free_coords;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_coords.push_back(j);
    const int t = static_cast<int>(free_coords.size());

    Matrix<K> proj(t, n);
    for (int j = 0; j < n; ++j) {
        Vec<K> r = span.reduce(unit_vec<K>(n, j));
        for (int m = 0; m < t; ++m) proj.at(m, j) = r[free_coords[m]];
    }
    Matrix<K> section(n, t);
    for (int m = 0; m < t; ++m) section.at(free_coords[m], m) = K(1);

    StructureTensor<K> st(t);
    std::vector<Vec<K>> img(n);
    for (int j = 0; j < n; ++j) img[j] = detail::apply_sparse(proj, unit_vec<K>(n, j));
    for (int m1 = 0; m1 < t; ++m1)
        for (int m2 = 0; m2 < t; ++m2) {
            for (const auto& [k, c] : alg->structure().product(free_coords[m1], free_coords[m2]))
                for (int r = 0; r < t; ++r) {
                    K v = c * img[k][r];
                    if (!is_zero(v)) st.add(m1, m2, r, std::move(v));
                }
        }
    Vec<K> unit_t = detail::apply_sparse(proj, alg->unit());
    std::vector<std::string> labels;
    if (!alg->labels().empty())
        for (int m = 0; m < t; ++m) labels.push_back(alg->labels()[free_coords[m]]);
    AlgebraPtr<K> target = FDAlgebra<K>::make(std::move(st), std::move(unit_t), std::move(labels));
    return {target, QuotientMap<K>::make(alg, target, std::move(proj), std::move(section))};
}

/// Lifts a unit of the target to a unit of the source along a quotient map.
/// Starts from the section representative; if that is singular, perturbs
/// along kernel directions (axis schedule t = 1, -1, 2, -2, ... first, then
/// seeded integer combinations of several directions).
template <class K>
Element<K> unit_lift(const QuotientMap<K>& q, const Element<K>& b) {
    if (b.algebra() != q.target()) throw PreconditionError("element not in the target algebra");
    if (is_zero(delta(b))) throw PreconditionError("unit_lift target element is not a unit");
    Element<K> a0 = q.lift_linear(b);
    auto verified = [&](const Element<K>& a) {
        if (q.apply(a) != b) throw InternalError("unit_lift left the fiber of the target element");
        return a;
    };
    if (!is_zero(delta(a0))) return verified(a0);

    std::vector<Vec<K>> dirs = kernel_basis(q.projection());
    for (const auto& v : dirs) {
        Element<K> dir(q.source(), v);
        for (int mag = 1; mag <= 4; ++mag)
            for (int sign : {1, -1}) {
                Element<K> cand = a0 + (K(sign * mag) * dir);
                if (!is_zero(delta(cand))) return verified(cand);
            }
    }
    // delta restricted to the fiber is a nonzero polynomial, but it can
    // vanish on every single axis line; fall back to joint perturbations.
    std::mt19937 rng(0x6b697431u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        Element<K> cand = a0;
        for (const auto& v : dirs) cand = cand + (K(coeff(rng)) * Element<K>(q.source(), v));
        if (!is_zero(delta(cand))) return verified(cand);
    }
    throw InternalError("unit_lift failed to locate a unit in the fiber");
}

/// Nilradical basis via the characteristic-zero trace-form criterion,
/// verified nilpotent by iterated powering of the ideal span.
template <class K>
IdealBasis<K> nilradical(const AlgebraPtr<K>& alg) {
    const int n = alg->dim();
    const auto& st = alg->structure();
    Vec<K> tr(n, K(0));
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (const auto& [r, c] : st.product(m, k))
                if (r == k) tr[m] = tr[m] + c;
    Matrix<K> gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            K g(0);
            for (const auto& [m, c] : st.product(i, j)) g = g + c * tr[m];
            gram.at(i, j) = g;
        }
    std::vector<Vec<K>> basis = kernel_basis(gram);
    IdealBasis<K> ideal = [&] {
        try {
            return make_ideal(alg, basis);
        } catch (const InputError&) {
            throw InternalError("trace-form kernel is not an ideal");
        }
    }();
    // Power the span until it vanishes; must happen within dim steps.
    std::vector<Vec<K>> current = ideal.basis;
    for (int step = 0; step < n && !current.empty(); ++step) {
        SpanBasis<K> next(n);
        for (const auto& x : current)
            for (const auto& y : ideal.basis) next.insert(detail::mult_coeffs(st, x, y));
        current = next.rows();
    }
    if (!current.empty()) throw InternalError("trace-form kernel is not nilpotent");
    return ideal;
}

/// A (x) B with structure constants multiplying componentwise; basis index
/// (i1, i2) maps to i1*dim(B) + i2.
template <class K>
AlgebraPtr<K> tensor_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
    const int na = a->dim(), nb = b->dim();
    StructureTensor<K> st(na * nb);
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < na; ++j1) {
            const auto& pa = a->structure().product(i1, j1);
            if (pa.empty()) continue;
            for (int i2 = 0; i2 < nb; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    for (const auto& [k1, c1] : pa)
                        for (const auto& [k2, c2] : b->structure().product(i2, j2))
                            st.add(i1 * nb + i2, j1 * nb + j2, k1 * nb + k2, c1 * c2);
        }
    Vec<K> unit(static_cast<std::size_t>(na) * nb, K(0));
    for (int i1 = 0; i1 < na; ++i1)
        for (int i2 = 0; i2 < nb; ++i2) unit[static_cast<std::size_t>(i1) * nb + i2] = a->unit()[i1] * b->unit()[i2];
    std::vector<std::string> labels;
    if (!a->labels().empty() && !b->labels().empty())
        for (int i1 = 0; i1 < na; ++i1)
            for (int i2 = 0; i2 < nb; ++i2) labels.push_back(a->labels()[i1] + "⊗" + b->labels()[i2]);
    return FDAlgebra<K>::make(std::move(st), std::move(unit), std::move(labels));
}

/// Product algebra with block-diagonal structure constants.
template <class K>
AlgebraPtr<K> direct_product(const std::vector<AlgebraPtr<K>>& factors) {
    if (factors.empty()) throw InputError("direct product of no algebras");
    int n = 0;
    std::vector<int> offset;
    for (const auto& f : factors) {
        offset.push_back(n);
        n += f->dim();
    }
    StructureTensor<K> st(n);
    Vec<K> unit(n, K(0));
    std::vector<std::string> labels;
    bool all_labeled = std::all_of(factors.begin(), factors.end(),
                                   [](const auto& f) { return !f->labels().empty(); });
    for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& alg = factors[f];
        const int off = offset[f];
        for (int i = 0; i < alg->dim(); ++i) {
            unit[off + i] = alg->unit()[i];
            if (all_labeled) labels.push_back("p" + std::to_string(f) + ":" + alg->labels()[i]);
            for (int j = 0; j < alg->dim(); ++j)
                for (const auto& [k, c] : alg->structure().product(i, j)) st.add(off + i, off + j, off + k, c);
        }
    }
    return FDAlgebra<K>::make(std::move(st), std::move(unit), all_labeled ? std::move(labels)
                                                                          : std::vector<std::string>{});
}

/// Generators b_i b_j - b_j b_i of the commutator ideal.
template <class K>
std::vector<Vec<K>> commutator_generators(const AlgebraPtr<K>& alg) {
    const int n = alg->dim();
    std::vector<Vec<K>> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec<K> v(n, K(0));
            for (const auto& [k, c] : alg->structure().product(i, j)) v[k] = v[k] + c;
            for (const auto& [k, c] : alg->structure().product(j, i)) v[k] = v[k] - c;
            if (!vec_is_zero(v)) gens.push_back(std::move(v));
        }
    return gens;
}

}  // namespace gk
