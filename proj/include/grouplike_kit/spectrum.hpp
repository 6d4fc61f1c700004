#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grouplike_kit/hopf.hpp"
#include "grouplike_kit/roots.hpp"

namespace gk {

namespace detail {

template <class K>
bool vec_less(const Vec<K>& a, const Vec<K>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return FieldTraits<K>::less(a[i], b[i]);
    }
    return a.size() < b.size();
}

template <class K>
struct VecLess {
    bool operator()(const Vec<K>& a, const Vec<K>& b) const { return vec_less(a, b); }
};

// chi on the target of a projection pulled back to the source: chi . proj.
template <class K>
Vec<K> pullback_char(const Matrix<K>& proj, const Vec<K>& chi) {
    Vec<K> out(proj.cols(), K(0));
    for (int r = 0; r < proj.rows(); ++r) {
        if (is_zero(chi[r])) continue;
        for (int j = 0; j < proj.cols(); ++j) {
            const K& p = proj.at(r, j);
            if (is_zero(p)) continue;
            out[j] = out[j] + chi[r] * p;
        }
    }
    return out;
}

// Characters of a commutative semisimple algebra by recursive splitting
// along rational eigenvalues of multiplication-by-basis-element operators.
// If a character into K exists, some basis element separates it, so finding
// no proper split on any basis element certifies that no character exists.
template <class K>
std::vector<Vec<K>> chars_semisimple_commutative(const AlgebraPtr<K>& alg) {
    const int n = alg->dim();
    if (n == 1) {
        // chi(b_0) is forced by chi(1) = 1.
        const K& u0 = alg->unit()[0];
        if (is_zero(u0)) throw InternalError("one-dimensional algebra with zero unit coefficient");
        return {Vec<K>{K(1) / u0}};
    }
    for (int t = 0; t < n; ++t) {
        Matrix<K> l = left_regular(basis_element(alg, t));
        for (const auto& [lambda, mult] : rational_roots(char_poly(l))) {
            (void)mult;
            Matrix<K> shifted = l;
            for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
            std::vector<Vec<K>> eig = kernel_basis(shifted);
            const int e = static_cast<int>(eig.size());
            if (e == 0 || e == n) continue;  // not a proper split
            // In a commutative semisimple algebra the eigenspace and the
            // image of (L - lambda) are complementary ideals.
            std::vector<Vec<K>> img = column_space_basis(shifted);
            IdealBasis<K> eig_ideal = [&] {
                try {
                    return make_ideal(alg, eig);
                } catch (const InputError&) {
                    throw InternalError("eigenspace is not an ideal; algebra was not semisimple commutative");
                }
            }();
            IdealBasis<K> img_ideal = [&] {
                try {
                    return make_ideal(alg, img);
                } catch (const InputError&) {
                    throw InternalError("image space is not an ideal; algebra was not semisimple commutative");
                }
            }();
            QuotientResult<K> on_eig = quotient(alg, img_ideal);  // factor supported on E_lambda
            QuotientResult<K> on_img = quotient(alg, eig_ideal);  // complementary factor
            std::vector<Vec<K>> chars;
            for (const auto& chi : chars_semisimple_commutative(on_eig.algebra))
                chars.push_back(pullback_char(on_eig.map.projection(), chi));
            for (const auto& chi : chars_semisimple_commutative(on_img.algebra))
                chars.push_back(pullback_char(on_img.map.projection(), chi));
            return chars;
        }
    }
    return {};  // no proper rational split anywhere => no characters into K
}

}  // namespace detail

/// All algebra morphisms R -> K, as value vectors on the basis of R,
/// deterministically ordered.  Route: commutative reduction, nilradical
/// strip, then rational-eigenvalue splitting of the semisimple quotient.
template <class K>
std::vector<Vec<K>> spec_chars(const AlgebraPtr<K>& alg) {
    AlgebraPtr<K> current = alg;
    std::vector<Matrix<K>> projections;

    std::vector<Vec<K>> comm = commutator_generators(current);
    if (!comm.empty()) {
        IdealBasis<K> commutator_ideal = ideal_closure(current, comm);
        SpanBasis<K> span(current->dim());
        for (const auto& v : commutator_ideal.basis) span.insert(v);
        // Every character kills commutators; an improper commutator ideal
        // (as in a simple noncommutative algebra) leaves none.
        if (span.contains(current->unit())) return {};
        QuotientResult<K> q = quotient(current, commutator_ideal);
        projections.push_back(q.map.projection());
        current = q.algebra;
    }
    IdealBasis<K> nil = nilradical(current);
    if (!nil.basis.empty()) {
        QuotientResult<K> q = quotient(current, nil);
        projections.push_back(q.map.projection());
        current = q.algebra;
    }
    std::vector<Vec<K>> chars = detail::chars_semisimple_commutative(current);
    for (auto it = projections.rbegin(); it != projections.rend(); ++it)
        for (auto& chi : chars) chi = detail::pullback_char(*it, chi);

    // Verify each character exactly: chi(1) = 1 and multiplicativity.
    for (const auto& chi : chars) {
        K at_unit(0);
        for (int i : detail::nonzero_indices(alg->unit())) at_unit = at_unit + alg->unit()[i] * chi[i];
        if (at_unit != K(1)) throw InternalError("character does not send 1 to 1");
        for (int i = 0; i < alg->dim(); ++i)
            for (int j = 0; j < alg->dim(); ++j) {
                K lhs(0);
                for (const auto& [k, c] : alg->structure().product(i, j)) lhs = lhs + c * chi[k];
                if (lhs != chi[i] * chi[j]) throw InternalError("character is not multiplicative");
            }
    }
    std::sort(chars.begin(), chars.end(), detail::VecLess<K>{});
    return chars;
}

/// The group of grouplike elements: the elements, their closed
/// multiplication table, the identity index and the inverse table.
template <class K>
struct GrouplikeSet {
    std::vector<Element<K>> elements;
    std::vector<std::vector<int>> table;
    int identity = -1;
    std::vector<int> inverse;

    int order() const { return static_cast<int>(elements.size()); }
};

/// Grouplike elements of H computed as characters of the dual algebra of
/// H's coalgebra (the linearization of the quadratic grouplike equation),
/// then re-verified against Delta and kappa and closed into a group.
template <class K>
GrouplikeSet<K> grouplikes(const HopfAlgebra<K>& h) {
    AlgebraPtr<K> dual = [&] {
        try {
            return dual_algebra_of_coalgebra(h.coalgebra);
        } catch (const InputError&) {
            throw PreconditionError("coalgebra fails coassociativity/counit; not a Hopf algebra");
        }
    }();
    std::vector<Vec<K>> chars = spec_chars(dual);

    GrouplikeSet<K> out;
    SpanBasis<K> independence(h.dim());
    std::map<Vec<K>, int, detail::VecLess<K>> index_of;
    for (const auto& chi : chars) {
        Element<K> x(h.algebra, chi);
        if (!is_grouplike(h, x)) throw InternalError("dual character is not grouplike");
        if (!independence.insert(chi)) throw InternalError("grouplike elements are linearly dependent");
        index_of.emplace(chi, static_cast<int>(out.elements.size()));
        out.elements.push_back(std::move(x));
    }
    const int m = out.order();
    out.table.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Element<K> prod = out.elements[i] * out.elements[j];
            auto it = index_of.find(prod.coeffs());
            if (it == index_of.end())
                throw InternalError("grouplike set is not closed under multiplication");
            out.table[i][j] = it->second;
        }
    auto one = index_of.find(h.algebra->unit());
    if (one == index_of.end()) throw InternalError("the unit is not among the grouplike elements");
    out.identity = one->second;
    out.inverse.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        Element<K> sx = apply_antipode(h, out.elements[i]);
        auto it = index_of.find(sx.coeffs());
        if (it == index_of.end() || out.table[i][it->second] != out.identity ||
            out.table[it->second][i] != out.identity)
            throw InternalError("antipode image is not the grouplike inverse");
        out.inverse[i] = it->second;
    }
    return out;
}

/// Basis of the primitive elements: the kernel of a |-> Delta(a) - a(x)1 -
/// 1(x)a, verified to be bracket-closed and killed by the counit.
template <class K>
struct PrimitiveSpace {
    std::vector<Element<K>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

template <class K>
PrimitiveSpace<K> primitives(const HopfAlgebra<K>& h) {
    const int n = h.dim();
    Matrix<K> m(n * n, n);
    for (int t = 0; t < n; ++t) {
        detail::Tensor2<K> col = detail::delta_of_vec(h.coalgebra, unit_vec<K>(n, t));
        for (const auto& [key, c] : detail::tensor_of_vecs(n, unit_vec<K>(n, t), h.algebra->unit()))
            detail::tensor_add(col, key, -c);
        for (const auto& [key, c] : detail::tensor_of_vecs(n, h.algebra->unit(), unit_vec<K>(n, t)))
            detail::tensor_add(col, key, -c);
        for (const auto& [key, c] : col) m.at(static_cast<int>(key), t) = c;
    }
    PrimitiveSpace<K> out;
    SpanBasis<K> span(n);
    for (auto& v : kernel_basis(m)) {
        span.insert(v);
        out.basis.emplace_back(h.algebra, std::move(v));
    }
    for (const auto& x : out.basis) {
        if (counit_of(h, x) != K(0)) throw InternalError("primitive element with nonzero counit");
        if (!is_primitive(h, x)) throw InternalError("kernel vector fails the primitive equation");
    }
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
            Element<K> br = out.basis[i] * out.basis[j] - out.basis[j] * out.basis[i];
            if (!span.contains(br.coeffs()))
                throw InternalError("primitive space is not closed under the Lie bracket");
        }
    return out;
}

template <class K>
struct GrouplikeSpan {
    std::vector<Vec<K>> basis;
    bool is_all = false;
    int dim() const { return static_cast<int>(basis.size()); }
};

template <class K>
GrouplikeSpan<K> grouplike_span(const HopfAlgebra<K>& h) {
    SpanBasis<K> span(h.dim());
    for (const auto& x : grouplikes(h).elements) span.insert(x.coeffs());
    return {span.rows(), span.rank() == h.dim()};
}

}  // namespace gk
