#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grouplike_kit/fdalgebra.hpp"

namespace gk {

/// Comultiplication tensor Delta(b_i) = sum_{j,k} d[i][j][k] b_j (x) b_k
/// (index convention: j is the left leg, k the right leg) plus the counit
/// values on the basis.  Axioms are checked by verify_hopf, not here, so
/// that broken inputs can be constructed and reported.
template <class K>
struct Coalgebra {
    int dim = 0;
    std::vector<std::vector<std::tuple<int, int, K>>> delta;
    Vec<K> counit;
};

template <class K>
Coalgebra<K> make_coalgebra(int dim, std::vector<std::vector<std::tuple<int, int, K>>> delta,
                            Vec<K> counit) {
    if (dim <= 0) throw InputError("coalgebra dimension must be positive");
    if (static_cast<int>(delta.size()) != dim) throw InputError("delta tensor has wrong outer size");
    if (static_cast<int>(counit.size()) != dim) throw InputError("counit vector has wrong length");
    for (auto& terms : delta) {
        for (const auto& [j, k, c] : terms) {
            (void)c;
            if (j < 0 || j >= dim || k < 0 || k >= dim)
                throw InputError("delta tensor leg index out of range");
        }
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
        });
        std::vector<std::tuple<int, int, K>> merged;
        for (auto& [j, k, c] : terms) {
            if (!merged.empty() && std::get<0>(merged.back()) == j && std::get<1>(merged.back()) == k)
                std::get<2>(merged.back()) = std::get<2>(merged.back()) + c;
            else
                merged.emplace_back(j, k, std::move(c));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& t) { return is_zero(std::get<2>(t)); }),
                     merged.end());
        terms = std::move(merged);
    }
    return {dim, std::move(delta), std::move(counit)};
}

/// Algebra + coalgebra on the same space + explicit antipode matrix.
template <class K>
struct HopfAlgebra {
    AlgebraPtr<K> algebra;
    Coalgebra<K> coalgebra;
    Matrix<K> antipode;

    int dim() const { return algebra->dim(); }
};

template <class K>
HopfAlgebra<K> make_hopf(AlgebraPtr<K> algebra, Coalgebra<K> coalgebra, Matrix<K> antipode) {
    if (!algebra) throw InputError("Hopf algebra without an algebra");
    const int n = algebra->dim();
    if (coalgebra.dim != n) throw InputError("coalgebra dimension differs from the algebra's");
    if (antipode.rows() != n || antipode.cols() != n)
        throw InputError("antipode matrix has the wrong shape");
    return {std::move(algebra), std::move(coalgebra), std::move(antipode)};
}

namespace detail {

// Sparse vectors in A (x) A and A (x) A (x) A keyed by packed leg indices.
template <class K>
using Tensor2 = std::map<std::uint64_t, K>;
template <class K>
using Tensor3 = std::map<std::uint64_t, K>;

inline std::uint64_t pack2(int n, int j, int k) {
    return static_cast<std::uint64_t>(j) * n + k;
}
inline std::uint64_t pack3(int n, int j, int k, int l) {
    return (static_cast<std::uint64_t>(j) * n + k) * n + l;
}

template <class K>
void tensor_add(Tensor2<K>& t, std::uint64_t key, const K& c) {
    auto it = t.find(key);
    if (it == t.end())
        t.emplace(key, c);
    else
        it->second = it->second + c;
}

template <class K>
void tensor_purge(Tensor2<K>& t) {
    for (auto it = t.begin(); it != t.end();)
        it = is_zero(it->second) ? t.erase(it) : std::next(it);
}

template <class K>
Tensor2<K> delta_of_vec(const Coalgebra<K>& co, const Vec<K>& x) {
    Tensor2<K> out;
    for (int i : nonzero_indices(x))
        for (const auto& [j, k, c] : co.delta[i]) tensor_add(out, pack2(co.dim, j, k), x[i] * c);
    tensor_purge(out);
    return out;
}

template <class K>
Tensor2<K> tensor_of_vecs(int n, const Vec<K>& x, const Vec<K>& y) {
    Tensor2<K> out;
    for (int j : nonzero_indices(x))
        for (int k : nonzero_indices(y)) out.emplace(pack2(n, j, k), x[j] * y[k]);
    return out;
}

/// Componentwise product in A (x) A of two sparse tensors.
template <class K>
Tensor2<K> tensor_mul(const StructureTensor<K>& st, const Tensor2<K>& a, const Tensor2<K>& b) {
    const int n = st.dim();
    Tensor2<K> out;
    for (const auto& [key1, c1] : a) {
        const int j1 = static_cast<int>(key1 / n), k1 = static_cast<int>(key1 % n);
        for (const auto& [key2, c2] : b) {
            const int j2 = static_cast<int>(key2 / n), k2 = static_cast<int>(key2 % n);
            K c12 = c1 * c2;
            for (const auto& [jl, cl] : st.product(j1, j2))
                for (const auto& [kr, cr] : st.product(k1, k2))
                    tensor_add(out, pack2(n, jl, kr), c12 * cl * cr);
        }
    }
    tensor_purge(out);
    return out;
}

/// Applies a linear map to one leg of a sparse tensor.
template <class K>
Tensor2<K> tensor_map_leg(int n, const Tensor2<K>& t, const Matrix<K>& m, bool left_leg) {
    Tensor2<K> out;
    for (const auto& [key, c] : t) {
        const int j = static_cast<int>(key / n), k = static_cast<int>(key % n);
        const int src = left_leg ? j : k;
        for (int r = 0; r < n; ++r) {
            const K& mr = m.at(r, src);
            if (is_zero(mr)) continue;
            tensor_add(out, left_leg ? pack2(n, r, k) : pack2(n, j, r), c * mr);
        }
    }
    tensor_purge(out);
    return out;
}

/// mu: A (x) A -> A.
template <class K>
Vec<K> tensor_contract_mu(const StructureTensor<K>& st, const Tensor2<K>& t) {
    const int n = st.dim();
    Vec<K> out(n, K(0));
    for (const auto& [key, c] : t) {
        const int j = static_cast<int>(key / n), k = static_cast<int>(key % n);
        for (const auto& [r, cr] : st.product(j, k)) out[r] = out[r] + c * cr;
    }
    return out;
}

/// (kappa (x) id) or (id (x) kappa) applied to a sparse tensor.
template <class K>
Vec<K> tensor_contract_counit(int n, const Tensor2<K>& t, const Vec<K>& counit, bool left_leg) {
    Vec<K> out(n, K(0));
    for (const auto& [key, c] : t) {
        const int j = static_cast<int>(key / n), k = static_cast<int>(key % n);
        if (left_leg)
            out[k] = out[k] + c * counit[j];
        else
            out[j] = out[j] + c * counit[k];
    }
    return out;
}

}  // namespace detail

struct HopfViolation {
    std::string axiom;
    std::vector<int> witness;  // basis indices
};

struct HopfReport {
    std::vector<HopfViolation> violations;
    std::size_t total_violations = 0;  // may exceed violations.size() when capped
    bool passed() const { return total_violations == 0; }

    std::string summary() const {
        if (passed()) return "all Hopf axioms hold";
        std::string s = std::to_string(total_violations) + " axiom violation(s); first: ";
        s += violations.front().axiom + " at (";
        for (std::size_t i = 0; i < violations.front().witness.size(); ++i)
            s += (i ? "," : "") + std::to_string(violations.front().witness[i]);
        s += ")";
        return s;
    }
};

/// Checks every Hopf axiom family exactly on all basis elements and pairs:
/// coassociativity, counit laws, bialgebra compatibility of Delta and
/// kappa, and both antipode identities.  Violations are data, not errors.
template <class K>
HopfReport verify_hopf(const HopfAlgebra<K>& h) {
    using namespace detail;
    constexpr std::size_t kMaxStored = 50;
    HopfReport report;
    auto violate = [&](const std::string& axiom, std::vector<int> witness) {
        ++report.total_violations;
        if (report.violations.size() < kMaxStored) report.violations.push_back({axiom, std::move(witness)});
    };

    const int n = h.dim();
    const auto& st = h.algebra->structure();
    const auto& co = h.coalgebra;

    // Coassociativity and counit laws, basis element by basis element.
    for (int i = 0; i < n; ++i) {
        Tensor3<K> lhs, rhs;
        for (const auto& [j, k, c] : co.delta[i]) {
            for (const auto& [a, b, d] : co.delta[j]) {  // (Delta (x) id)
                auto key = pack3(n, a, b, k);
                auto it = lhs.find(key);
                if (it == lhs.end())
                    lhs.emplace(key, c * d);
                else
                    it->second = it->second + c * d;
            }
            for (const auto& [a, b, d] : co.delta[k]) {  // (id (x) Delta)
                auto key = pack3(n, j, a, b);
                auto it = rhs.find(key);
                if (it == rhs.end())
                    rhs.emplace(key, c * d);
                else
                    it->second = it->second + c * d;
            }
        }
        tensor_purge(lhs);
        tensor_purge(rhs);
        if (lhs != rhs) violate("coassociativity", {i});

        Vec<K> e = unit_vec<K>(n, i);
        Tensor2<K> di = delta_of_vec(co, e);
        if (tensor_contract_counit(n, di, co.counit, true) != e) violate("counit-left", {i});
        if (tensor_contract_counit(n, di, co.counit, false) != e) violate("counit-right", {i});
    }

    // Bialgebra compatibility: Delta and kappa are algebra morphisms.
    {
        Tensor2<K> d1 = delta_of_vec(co, h.algebra->unit());
        Tensor2<K> onexone = tensor_of_vecs(n, h.algebra->unit(), h.algebra->unit());
        tensor_purge(onexone);
        if (d1 != onexone) violate("comultiplication-unit", {});
        K k1(0);
        for (int i : nonzero_indices(h.algebra->unit())) k1 = k1 + h.algebra->unit()[i] * co.counit[i];
        if (k1 != K(1)) violate("counit-unit", {});
    }
    std::vector<Tensor2<K>> delta_basis(n);
    for (int i = 0; i < n; ++i) delta_basis[i] = delta_of_vec(co, unit_vec<K>(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Tensor2<K> lhs;
            K kappa_prod(0);
            for (const auto& [k, c] : st.product(i, j)) {
                kappa_prod = kappa_prod + c * co.counit[k];
                for (const auto& [a, b] : delta_basis[k])
                    detail::tensor_add(lhs, a, c * b);
            }
            tensor_purge(lhs);
            if (lhs != tensor_mul(st, delta_basis[i], delta_basis[j]))
                violate("comultiplication-multiplicative", {i, j});
            if (kappa_prod != co.counit[i] * co.counit[j]) violate("counit-multiplicative", {i, j});
        }

    // Antipode identities mu(sigma (x) id)Delta = u kappa = mu(id (x) sigma)Delta.
    for (int i = 0; i < n; ++i) {
        Vec<K> expected = vec_scale(co.counit[i], h.algebra->unit());
        Vec<K> left = tensor_contract_mu(st, tensor_map_leg(n, delta_basis[i], h.antipode, true));
        if (left != expected) violate("antipode-left", {i});
        Vec<K> right = tensor_contract_mu(st, tensor_map_leg(n, delta_basis[i], h.antipode, false));
        if (right != expected) violate("antipode-right", {i});
    }
    return report;
}

/// The dual algebra of a coalgebra: the transpose of the Delta tensor with
/// the counit as unit.  Throws InputError when the coalgebra is not
/// coassociative/counital (the transpose then fails the algebra axioms).
template <class K>
AlgebraPtr<K> dual_algebra_of_coalgebra(const Coalgebra<K>& co) {
    StructureTensor<K> st(co.dim);
    for (int i = 0; i < co.dim; ++i)
        for (const auto& [j, k, c] : co.delta[i]) st.add(j, k, i, c);
    return FDAlgebra<K>::make(std::move(st), co.counit);
}

/// The full dual Hopf algebra: multiplication from Delta-transpose, unit =
/// counit, comultiplication from mu-transpose, counit = evaluation at 1,
/// antipode = transpose of the antipode.
template <class K>
HopfAlgebra<K> dualize(const HopfAlgebra<K>& h) {
    const int n = h.dim();
    AlgebraPtr<K> dual_alg = dual_algebra_of_coalgebra(h.coalgebra);
    std::vector<std::vector<std::tuple<int, int, K>>> delta(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : h.algebra->structure().product(i, j))
                delta[k].emplace_back(i, j, c);
    Coalgebra<K> dual_co = make_coalgebra(n, std::move(delta), h.algebra->unit());
    return make_hopf(std::move(dual_alg), std::move(dual_co), h.antipode.transpose());
}

/// Tensor product of Hopf algebras (legwise structure on the tensor basis).
template <class K>
HopfAlgebra<K> hopf_tensor(const HopfAlgebra<K>& h1, const HopfAlgebra<K>& h2) {
    const int n1 = h1.dim(), n2 = h2.dim();
    const int n = n1 * n2;
    AlgebraPtr<K> alg = tensor_algebra(h1.algebra, h2.algebra);
    std::vector<std::vector<std::tuple<int, int, K>>> delta(n);
    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2)
            for (const auto& [j1, k1, c1] : h1.coalgebra.delta[i1])
                for (const auto& [j2, k2, c2] : h2.coalgebra.delta[i2])
                    delta[i1 * n2 + i2].emplace_back(j1 * n2 + j2, k1 * n2 + k2, c1 * c2);
    Vec<K> counit(static_cast<std::size_t>(n), K(0));
    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2)
            counit[static_cast<std::size_t>(i1) * n2 + i2] = h1.coalgebra.counit[i1] * h2.coalgebra.counit[i2];
    Matrix<K> antipode(n, n);
    for (int r1 = 0; r1 < n1; ++r1)
        for (int c1 = 0; c1 < n1; ++c1) {
            if (is_zero(h1.antipode.at(r1, c1))) continue;
            for (int r2 = 0; r2 < n2; ++r2)
                for (int c2 = 0; c2 < n2; ++c2) {
                    if (is_zero(h2.antipode.at(r2, c2))) continue;
                    antipode.at(r1 * n2 + r2, c1 * n2 + c2) =
                        h1.antipode.at(r1, c1) * h2.antipode.at(r2, c2);
                }
        }
    return make_hopf(std::move(alg), make_coalgebra(n, std::move(delta), std::move(counit)),
                     std::move(antipode));
}

/// Antipode applied to an element (matrix action on coefficients).
template <class K>
Element<K> apply_antipode(const HopfAlgebra<K>& h, const Element<K>& x) {
    if (x.algebra() != h.algebra) throw PreconditionError("element not in this Hopf algebra");
    return Element<K>(h.algebra, detail::apply_sparse(h.antipode, x.coeffs()));
}

template <class K>
K counit_of(const HopfAlgebra<K>& h, const Element<K>& x) {
    if (x.algebra() != h.algebra) throw PreconditionError("element not in this Hopf algebra");
    K out(0);
    for (int i : detail::nonzero_indices(x.coeffs())) out = out + x.coeffs()[i] * h.coalgebra.counit[i];
    return out;
}

/// Exact test of the grouplike equation Delta(x) = x (x) x, kappa(x) = 1.
template <class K>
bool is_grouplike(const HopfAlgebra<K>& h, const Element<K>& x) {
    using namespace detail;
    if (counit_of(h, x) != K(1)) return false;
    Tensor2<K> dx = delta_of_vec(h.coalgebra, x.coeffs());
    Tensor2<K> xx = tensor_of_vecs(h.dim(), x.coeffs(), x.coeffs());
    tensor_purge(xx);
    return dx == xx;
}

/// Exact test of the primitive equation Delta(x) = x (x) 1 + 1 (x) x.
template <class K>
bool is_primitive(const HopfAlgebra<K>& h, const Element<K>& x) {
    using namespace detail;
    Tensor2<K> dx = delta_of_vec(h.coalgebra, x.coeffs());
    Tensor2<K> expect = tensor_of_vecs(h.dim(), x.coeffs(), h.algebra->unit());
    for (const auto& [key, c] : tensor_of_vecs(h.dim(), h.algebra->unit(), x.coeffs()))
        tensor_add(expect, key, c);
    tensor_purge(expect);
    return dx == expect;
}

}  // namespace gk
