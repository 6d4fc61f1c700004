#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grouplike_kit/fdalgebra.hpp"
#include "grouplike_kit/poly.hpp"
#include "grouplike_kit/roots.hpp"

namespace gk {

/// K[X]/(f) on the power basis 1, X, ..., X^{deg f - 1}.
template <class K>
struct QuotientRing {
    Poly<K> modulus;  // monic, degree >= 1
    AlgebraPtr<K> algebra;

    int degree() const { return modulus.degree(); }

    Element<K> from_poly(const Poly<K>& p) const {
        Poly<K> r = poly_mod(p, modulus);
        Vec<K> coeffs(static_cast<std::size_t>(modulus.degree()), K(0));
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) coeffs[i] = r.coeffs()[i];
        return Element<K>(algebra, std::move(coeffs));
    }

    Poly<K> to_poly(const Element<K>& x) const {
        if (x.algebra() != algebra) throw PreconditionError("element not in this quotient ring");
        return Poly<K>(x.coeffs());
    }
};

template <class K>
QuotientRing<K> make_quotient_ring(const Poly<K>& modulus) {
    if (modulus.is_zero() || modulus.degree() < 1)
        throw InputError("quotient ring modulus must have degree >= 1");
    if (!modulus.is_monic()) throw InputError("quotient ring modulus must be monic");
    const int d = modulus.degree();
    // X^m mod f for all m up to 2d-2, by repeated multiplication by X.
    std::vector<Poly<K>> red(static_cast<std::size_t>(2 * d - 1));
    red[0] = Poly<K>::constant(K(1));
    for (int m = 1; m <= 2 * d - 2; ++m) {
        std::vector<K> shifted(red[m - 1].coeffs().size() + 1, K(0));
        for (std::size_t i = 0; i < red[m - 1].coeffs().size(); ++i) shifted[i + 1] = red[m - 1].coeffs()[i];
        red[m] = poly_mod(Poly<K>(std::move(shifted)), modulus);
    }
    StructureTensor<K> st(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (std::size_t k = 0; k < red[i + j].coeffs().size(); ++k)
                st.add(i, j, static_cast<int>(k), red[i + j].coeffs()[k]);
    Vec<K> unit = unit_vec<K>(d, 0);
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "X" : "X^" + std::to_string(i)));
    return {modulus, FDAlgebra<K>::make(std::move(st), std::move(unit), std::move(labels))};
}

/// Pairwise coprime factor list (p_i, k_i) with the leading unit stripped
/// by normalization.
template <class K>
struct FactoredModulus {
    std::vector<std::pair<Poly<K>, int>> factors;
    K leading_unit = K(1);

    Poly<K> product() const {
        Poly<K> f = Poly<K>::constant(K(1));
        for (const auto& [p, k] : factors) f = f * poly_pow(p, k);
        return f;
    }
};

template <class K>
FactoredModulus<K> make_factored_modulus(std::vector<std::pair<Poly<K>, int>> factors,
                                         K leading_unit = K(1)) {
    for (const auto& [p, k] : factors) {
        if (p.degree() < 1 || !p.is_monic())
            throw InputError("each factor must be monic of degree >= 1");
        if (k < 1) throw InputError("factor exponents must be positive");
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (poly_gcd(factors[i].first, factors[j].first).degree() != 0)
                throw InputError("factors are not pairwise coprime");
    return {std::move(factors), std::move(leading_unit)};
}

/// Yun squarefree decomposition f = u * prod s_m^m with the s_m squarefree
/// and pairwise coprime; does not split the s_m further.
template <class K>
FactoredModulus<K> squarefree_factor(const Poly<K>& f) {
    if (f.is_zero()) throw PreconditionError("squarefree_factor of the zero polynomial");
    K unit = f.leading();
    Poly<K> g = make_monic(f);
    std::vector<std::pair<Poly<K>, int>> factors;
    if (g.degree() >= 1) {
        Poly<K> d = poly_gcd(g, g.derivative());
        Poly<K> w = poly_div_exact(g, d);
        Poly<K> y = poly_div_exact(g.derivative(), d);
        Poly<K> z = y - w.derivative();
        for (int m = 1; w.degree() >= 1; ++m) {
            Poly<K> a = poly_gcd(w, z);
            if (a.degree() >= 1) factors.emplace_back(a, m);
            w = poly_div_exact(w, a);
            y = poly_div_exact(z, a);
            z = y - w.derivative();
        }
    }
    return make_factored_modulus<K>(std::move(factors), std::move(unit));
}

/// Chinese-remainder data for K[X]/(prod p_i^{k_i}).
template <class K>
struct CrtDecomposition {
    QuotientRing<K> source;
    std::vector<QuotientRing<K>> factors;
    AlgebraPtr<K> product;
    QuotientMap<K> forward;   // source -> product, section = backward
    QuotientMap<K> backward;  // product -> source, section = forward
    std::vector<Element<K>> idempotents;
};

template <class K>
CrtDecomposition<K> crt_decompose(const FactoredModulus<K>& fm) {
    if (fm.factors.empty()) throw InputError("CRT decomposition needs at least one factor");
    Poly<K> f = fm.product();
    QuotientRing<K> source = make_quotient_ring(f);
    std::vector<QuotientRing<K>> factor_rings;
    std::vector<AlgebraPtr<K>> factor_algebras;
    std::vector<Element<K>> idems;
    for (const auto& [p, k] : fm.factors) {
        Poly<K> q = poly_pow(p, k);
        factor_rings.push_back(make_quotient_ring(q));
        factor_algebras.push_back(factor_rings.back().algebra);
        Poly<K> cofactor = poly_div_exact(f, q);
        auto [g, u, v] = poly_xgcd(cofactor, q);
        if (g.degree() != 0) throw InputError("factors are not pairwise coprime");
        // g is the monic gcd = 1, so u*cofactor = 1 mod q already.
        idems.push_back(source.from_poly(u * cofactor));
    }
    // Bezout idempotents: sum to 1, orthogonal, each idempotent.
    Element<K> sum = zero_element(source.algebra);
    for (const auto& e : idems) sum = sum + e;
    if (sum != algebra_unit(source.algebra)) throw InternalError("CRT idempotents do not sum to 1");
    for (std::size_t i = 0; i < idems.size(); ++i)
        for (std::size_t j = 0; j < idems.size(); ++j) {
            Element<K> prod = idems[i] * idems[j];
            if (i == j ? (prod != idems[i]) : !prod.is_zero_element())
                throw InternalError("CRT idempotents are not orthogonal idempotents");
        }

    AlgebraPtr<K> product = direct_product(factor_algebras);
    const int n = source.algebra->dim();
    Matrix<K> forward(n, n), backward(n, n);
    int offset = 0;
    for (std::size_t fi = 0; fi < factor_rings.size(); ++fi) {
        const int d = factor_rings[fi].degree();
        for (int m = 0; m < n; ++m) {
            // forward: X^m |-> X^m mod p_i^{k_i} in block fi
            Poly<K> r = poly_mod(poly_pow(Poly<K>::x(), m), factor_rings[fi].modulus);
            for (std::size_t c = 0; c < r.coeffs().size(); ++c)
                forward.at(offset + static_cast<int>(c), m) = r.coeffs()[c];
        }
        for (int m = 0; m < d; ++m) {
            // backward: block-fi basis X^m |-> X^m * e_fi mod f
            Element<K> col = source.from_poly(poly_pow(Poly<K>::x(), m)) * idems[fi];
            for (int r = 0; r < n; ++r) backward.at(r, offset + m) = col.coeffs()[r];
        }
        offset += d;
    }
    QuotientMap<K> fwd = QuotientMap<K>::make(source.algebra, product, forward, backward);
    QuotientMap<K> bwd = QuotientMap<K>::make(product, source.algebra, backward, forward);
    return {std::move(source), std::move(factor_rings), std::move(product),
            std::move(fwd),    std::move(bwd),          std::move(idems)};
}

namespace detail {

template <class K>
void require_irreducible(const Poly<K>& p, bool attested) {
    if (p.degree() < 1 || !p.is_monic()) throw InputError("p must be monic of degree >= 1");
    if (p.degree() == 1) return;
    if (p.degree() == 2) {
        if (!rational_roots(p).empty())
            throw InputError("p is reducible: it has a root in the working field");
        return;
    }
    if (!attested)
        throw InputError("irreducibility of degree >= 3 moduli must be attested by the caller");
}

}  // namespace detail

/// K[X]/(p^k) for an irreducible p: a local ring whose non-units form the
/// maximal ideal (p)/(p^k).
template <class K>
struct LocalRing {
    Poly<K> p;
    int k = 1;
    QuotientRing<K> ring;

    int maximal_ideal_dim() const { return (k - 1) * p.degree(); }
};

template <class K>
LocalRing<K> make_local_ring(const Poly<K>& p, int k, bool attested_irreducible = false) {
    if (k < 1) throw InputError("prime-power exponent must be >= 1");
    detail::require_irreducible(p, attested_irreducible);
    return {p, k, make_quotient_ring(poly_pow(p, k))};
}

enum class LocalClass { Unit, MaximalIdealMember };

/// x is a unit iff its image in K[X]/(p) is nonzero.
template <class K>
LocalClass local_classify(const LocalRing<K>& lr, const Element<K>& x) {
    Poly<K> residue = poly_mod(lr.ring.to_poly(x), lr.p);
    return residue.is_zero() ? LocalClass::MaximalIdealMember : LocalClass::Unit;
}

/// Basis vectors of (p)/(p^k): p * X^m for m < (k-1) deg p.
template <class K>
std::vector<Vec<K>> maximal_ideal_basis(const LocalRing<K>& lr) {
    std::vector<Vec<K>> basis;
    for (int m = 0; m < lr.maximal_ideal_dim(); ++m)
        basis.push_back(lr.ring.from_poly(lr.p * poly_pow(Poly<K>::x(), m)).coeffs());
    return basis;
}

/// The terminating geometric series sum_{m<k} f^m = (1-f)^{-1} for f in the
/// maximal ideal; the product with (1-f) is re-verified exactly.
template <class K>
Element<K> geometric_inverse(const LocalRing<K>& lr, const Element<K>& f) {
    if (local_classify(lr, f) != LocalClass::MaximalIdealMember)
        throw PreconditionError("geometric_inverse needs an element of the maximal ideal");
    Element<K> sum = algebra_unit(lr.ring.algebra);
    Element<K> pw = f;
    for (int m = 1; m < lr.k && !pw.is_zero_element(); ++m) {
        sum = sum + pw;
        pw = pw * f;
    }
    if (!pw.is_zero_element()) throw InternalError("maximal-ideal element is not nilpotent");
    Element<K> one_minus = algebra_unit(lr.ring.algebra) - f;
    if (one_minus * sum != algebra_unit(lr.ring.algebra))
        throw InternalError("geometric series failed to invert 1-f");
    return sum;
}

/// Witness pair recorded while checking that units lift along a bond.
template <class K>
struct TowerLiftWitness {
    int from_level;  // 1-based source level (k+1)
    Element<K> target_unit;
    Element<K> lifted_unit;
};

/// The truncated tower K[X]/(p), K[X]/(p^2), ..., K[X]/(p^K) with verified
/// bonding quotient maps.
template <class K>
struct Tower {
    Poly<K> p;
    int depth = 1;
    std::vector<LocalRing<K>> levels;        // levels[i] = K[X]/(p^{i+1})
    std::vector<QuotientMap<K>> bonds;       // bonds[i]: levels[i+1] -> levels[i]
    std::vector<TowerLiftWitness<K>> lift_witnesses;
};

namespace detail {

template <class K>
Matrix<K> power_basis_reduction(const QuotientRing<K>& from, const QuotientRing<K>& to) {
    Matrix<K> m(to.degree(), from.degree());
    for (int j = 0; j < from.degree(); ++j) {
        Poly<K> r = poly_mod(poly_pow(Poly<K>::x(), j), to.modulus);
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) m.at(static_cast<int>(i), j) = r.coeffs()[i];
    }
    return m;
}

}  // namespace detail

template <class K>
Tower<K> build_tower(const Poly<K>& p, int k_max, bool attested_irreducible = false) {
    if (k_max < 1) throw InputError("tower depth must be >= 1");
    Tower<K> tower;
    tower.p = p;
    tower.depth = k_max;
    for (int k = 1; k <= k_max; ++k) tower.levels.push_back(make_local_ring(p, k, attested_irreducible));
    for (int k = 1; k < k_max; ++k) {
        const QuotientRing<K>& upper = tower.levels[k].ring;      // p^{k+1}
        const QuotientRing<K>& lower = tower.levels[k - 1].ring;  // p^k
        Matrix<K> proj = detail::power_basis_reduction(upper, lower);
        Matrix<K> section(upper.degree(), lower.degree());
        for (int m = 0; m < lower.degree(); ++m) section.at(m, m) = K(1);
        tower.bonds.push_back(QuotientMap<K>::make(upper.algebra, lower.algebra, proj, section));
    }
    // Coherence: adjacent bonds compose to the direct reduction.
    for (int k = 0; k + 1 < static_cast<int>(tower.bonds.size()); ++k) {
        Matrix<K> direct =
            detail::power_basis_reduction(tower.levels[k + 2].ring, tower.levels[k].ring);
        if (tower.bonds[k].projection() * tower.bonds[k + 1].projection() != direct)
            throw InternalError("tower bonds do not compose to the direct quotient");
    }
    // Unit groups surject level by level; record one lift witness per bond.
    for (std::size_t i = 0; i < tower.bonds.size(); ++i) {
        const LocalRing<K>& lower = tower.levels[i];
        Element<K> w = lower.ring.from_poly(Poly<K>(std::vector<K>{K(1), K(1)}));  // 1 + X
        if (local_classify(lower, w) != LocalClass::Unit)
            w = lower.ring.from_poly(Poly<K>(std::vector<K>{K(2), K(1)}));  // 2 + X
        tower.lift_witnesses.push_back(
            {static_cast<int>(i) + 2, w, unit_lift(tower.bonds[i], w)});
    }
    return tower;
}

/// A coherent family of elements along the tower, one per level.
template <class K>
struct TowerElement {
    int depth = 0;
    std::vector<Vec<K>> level_coeffs;
};

template <class K>
TowerElement<K> make_tower_element(const Tower<K>& tower, std::vector<Vec<K>> level_coeffs) {
    if (static_cast<int>(level_coeffs.size()) != tower.depth)
        throw InputError("tower element must supply one coefficient vector per level");
    for (int k = 0; k + 1 < tower.depth; ++k) {
        Element<K> upper(tower.levels[k + 1].ring.algebra, level_coeffs[k + 1]);
        if (tower.bonds[k].apply(upper).coeffs() != level_coeffs[k])
            throw InputError("tower element is not coherent under the bond to level " +
                             std::to_string(k + 1));
    }
    return {tower.depth, std::move(level_coeffs)};
}

template <class K>
TowerElement<K> tower_element_from_poly(const Tower<K>& tower, const Poly<K>& f) {
    std::vector<Vec<K>> coeffs;
    for (const auto& level : tower.levels) coeffs.push_back(level.ring.from_poly(f).coeffs());
    return make_tower_element(tower, std::move(coeffs));
}

template <class K>
TowerElement<K> tower_multiply(const Tower<K>& tower, const TowerElement<K>& x, const TowerElement<K>& y) {
    std::vector<Vec<K>> coeffs;
    for (int k = 0; k < tower.depth; ++k) {
        Element<K> a(tower.levels[k].ring.algebra, x.level_coeffs[k]);
        Element<K> b(tower.levels[k].ring.algebra, y.level_coeffs[k]);
        coeffs.push_back((a * b).coeffs());
    }
    return make_tower_element(tower, std::move(coeffs));
}

/// The finite shadow of the universal map out of the one-variable free
/// object: the subalgebra generated by a, presented as K[X]/(minpoly).
template <class K>
struct UniversalImage {
    Poly<K> minimal_polynomial;
    QuotientRing<K> domain;
    Matrix<K> map;  // dim(A) x deg(minpoly), X^i |-> a^i
};

template <class K>
UniversalImage<K> evaluate_universal(const Element<K>& a, int depth) {
    if (depth < 1) throw InputError("evaluate_universal depth must be >= 1");
    const auto& alg = a.algebra();
    const int n = alg->dim();
    std::vector<Vec<K>> powers{alg->unit()};
    Element<K> pw = algebra_unit(alg);
    Poly<K> minpoly;
    for (int m = 1; m <= depth; ++m) {
        pw = pw * a;
        Matrix<K> basis(n, m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i) basis.at(i, j) = powers[j][i];
        SolveResult<K> s = solve(basis, pw.coeffs());
        if (s.consistent()) {
            std::vector<K> c(m + 1, K(0));
            for (int j = 0; j < m; ++j) c[j] = -(*s.solution)[j];
            c[m] = K(1);
            minpoly = Poly<K>(std::move(c));
            break;
        }
        powers.push_back(pw.coeffs());
    }
    if (minpoly.is_zero())
        throw PreconditionError("depth is smaller than the algebraic degree of the element");
    QuotientRing<K> domain = make_quotient_ring(minpoly);
    const int d = minpoly.degree();
    Matrix<K> map(n, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < n; ++i) map.at(i, j) = powers[j][i];
    // Morphism check: map(X^i * X^j mod minpoly) = a^i * a^j.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Element<K> lhs(alg, detail::apply_sparse(
                                    map, domain.from_poly(poly_pow(Poly<K>::x(), i + j)).coeffs()));
            Element<K> rhs = Element<K>(alg, powers[static_cast<std::size_t>(i)]) *
                             Element<K>(alg, powers[static_cast<std::size_t>(j)]);
            if (lhs != rhs) throw InternalError("universal map is not multiplicative");
        }
    return {std::move(minpoly), std::move(domain), std::move(map)};
}

}  // namespace gk
