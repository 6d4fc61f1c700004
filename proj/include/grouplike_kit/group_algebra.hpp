#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grouplike_kit/group_spec.hpp"
#include "grouplike_kit/spectrum.hpp"

namespace gk {

/// K[G]: the Hopf algebra with basis G, product from the Cayley table,
/// Delta(b_g) = b_g (x) b_g, kappa(b_g) = 1 and sigma(b_g) = b_{g^-1}.
template <class K>
struct GroupAlgebra {
    GroupSpec group;
    HopfAlgebra<K> hopf;

    /// eta: the basis inclusion g |-> b_g.
    Element<K> eta(int g) const {
        if (g < 0 || g >= group.order) throw InputError("group element index out of range");
        return basis_element(hopf.algebra, g);
    }
};

template <class K>
GroupAlgebra<K> build_group_algebra(const GroupSpec& g) {
    const int n = g.order;
    StructureTensor<K> st(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) st.add(i, j, g.op(i, j), K(1));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(i == g.identity ? "e" : "g" + std::to_string(i));
    AlgebraPtr<K> alg = FDAlgebra<K>::make(std::move(st), unit_vec<K>(n, g.identity), std::move(labels));

    std::vector<std::vector<std::tuple<int, int, K>>> delta(n);
    for (int i = 0; i < n; ++i) delta[i].emplace_back(i, i, K(1));
    Coalgebra<K> co = make_coalgebra(n, std::move(delta), Vec<K>(n, K(1)));
    Matrix<K> sigma(n, n);
    for (int i = 0; i < n; ++i) sigma.at(g.inv(i), i) = K(1);

    GroupAlgebra<K> ga{g, make_hopf(std::move(alg), std::move(co), std::move(sigma))};
    HopfReport report = verify_hopf(ga.hopf);
    if (!report.passed()) throw InternalError("group algebra fails Hopf axioms: " + report.summary());
    return ga;
}

/// Linear extension of g |-> images[g] to an algebra morphism K[G] -> A.
/// The pairwise group-law check is exactly multiplicativity on basis pairs,
/// and exhibits two-sided inverses for every image.
template <class K>
Matrix<K> extend_morphism(const GroupAlgebra<K>& ga, const AlgebraPtr<K>& target,
                          const std::vector<Element<K>>& images) {
    const int n = ga.group.order;
    if (static_cast<int>(images.size()) != n)
        throw PreconditionError("need exactly one image per group element");
    for (const auto& x : images)
        if (x.algebra() != target) throw PreconditionError("image lies in the wrong algebra");
    if (images[ga.group.identity] != algebra_unit(target))
        throw PreconditionError("the identity must map to the unit of the target");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (images[g] * images[h] != images[ga.group.op(g, h)])
                throw PreconditionError("images violate the group law at pair (" + std::to_string(g) +
                                        "," + std::to_string(h) + ")");
    Matrix<K> m(target->dim(), n);
    for (int g = 0; g < n; ++g)
        for (int r = 0; r < target->dim(); ++r) m.at(r, g) = images[g].coeffs()[r];
    return m;
}

/// The finite Tannaka roundtrip: the grouplikes of K[G] are exactly the
/// group basis, and their multiplication table is the input group's.
template <class K>
struct TannakaResult {
    GrouplikeSet<K> grouplikes;
    std::vector<int> to_group;  // grouplike index -> group element index
};

template <class K>
TannakaResult<K> tannaka_recover(const GroupAlgebra<K>& ga) {
    GrouplikeSet<K> gl = grouplikes(ga.hopf);
    const int n = ga.group.order;
    if (gl.order() != n)
        throw InternalError("grouplike count " + std::to_string(gl.order()) +
                            " differs from the group order " + std::to_string(n));
    std::vector<int> to_group(n, -1);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        const Vec<K>& c = gl.elements[i].coeffs();
        int hit = -1;
        for (int g = 0; g < n; ++g) {
            if (c[g] == K(1) && !seen[g]) {
                hit = g;
                break;
            }
        }
        if (hit < 0 || gl.elements[i] != ga.eta(hit))
            throw InternalError("a grouplike element of K[G] is not a group basis vector");
        seen[hit] = true;
        to_group[i] = hit;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (to_group[gl.table[i][j]] != ga.group.op(to_group[i], to_group[j]))
                throw InternalError("recovered multiplication table is not isomorphic to the group");
    return {std::move(gl), std::move(to_group)};
}

/// Builds a GroupSpec out of a recovered grouplike group.
template <class K>
GroupSpec group_spec_of(const GrouplikeSet<K>& gl, const std::string& name) {
    std::vector<int> cayley;
    cayley.reserve(static_cast<std::size_t>(gl.order()) * gl.order());
    for (const auto& row : gl.table) cayley.insert(cayley.end(), row.begin(), row.end());
    return make_group(name, gl.order(), gl.identity, std::move(cayley));
}

/// The counit-side roundtrip: K[Gamma(H)] -> H via the grouplike images.
struct EpsilonReport {
    int gamma_order = 0;
    int span_dim = 0;
    bool eps_is_iso = false;
};

template <class K>
EpsilonReport epsilon_roundtrip(const HopfAlgebra<K>& h) {
    GrouplikeSet<K> gl = grouplikes(h);
    GroupAlgebra<K> domain = build_group_algebra<K>(group_spec_of(gl, "gamma"));
    Matrix<K> eps = extend_morphism(domain, h.algebra, gl.elements);
    SpanBasis<K> image(h.dim());
    for (const auto& x : gl.elements) image.insert(x.coeffs());
    if (image.rank() != gl.order())
        throw InternalError("grouplike span dimension differs from the grouplike count");
    (void)eps;
    return {gl.order(), image.rank(), image.rank() == h.dim()};
}

/// The function Hopf algebra K^G as the dual of K[G]; its characters are
/// the |G| point evaluations.
template <class K>
HopfAlgebra<K> representative_dual(const GroupAlgebra<K>& ga) {
    return dualize(ga.hopf);
}

/// A measure on a finite group: one exact weight per element.
template <class K>
struct MeasureVector {
    GroupSpec group;
    Vec<K> weights;

    bool is_positive() const {  // meaningful over the rational cone
        for (const auto& w : weights)
            if (FieldTraits<K>::imag_part(w) != 0 || FieldTraits<K>::real_part(w) < 0) return false;
        return true;
    }
    bool is_probability() const {
        if (!is_positive()) return false;
        K total(0);
        for (const auto& w : weights) total = total + w;
        return total == K(1);
    }
};

template <class K>
MeasureVector<K> make_measure(const GroupSpec& g, Vec<K> weights) {
    if (static_cast<int>(weights.size()) != g.order)
        throw InputError("measure needs one weight per group element");
    return {g, std::move(weights)};
}

template <class K>
MeasureVector<K> point_mass(const GroupSpec& g, int x) {
    if (x < 0 || x >= g.order) throw InputError("point mass at an element out of range");
    return {g, unit_vec<K>(g.order, x)};
}

/// Convolution (mu * nu)(k) = sum_{gh=k} mu(g) nu(h).
template <class K>
MeasureVector<K> convolve(const MeasureVector<K>& mu, const MeasureVector<K>& nu) {
    if (mu.group.cayley != nu.group.cayley)
        throw PreconditionError("convolution of measures on different groups");
    Vec<K> w(mu.group.order, K(0));
    for (int g = 0; g < mu.group.order; ++g) {
        if (is_zero(mu.weights[g])) continue;
        for (int h = 0; h < mu.group.order; ++h) {
            if (is_zero(nu.weights[h])) continue;
            int k = mu.group.op(g, h);
            w[k] = w[k] + mu.weights[g] * nu.weights[h];
        }
    }
    return {mu.group, std::move(w)};
}

/// rho(mu) = sum_g mu(g) b_g: the measure embedding, an algebra morphism
/// from convolution onto K[G] (bijective at finite order).
template <class K>
Element<K> rho_embed(const GroupAlgebra<K>& ga, const MeasureVector<K>& mu) {
    if (mu.group.cayley != ga.group.cayley)
        throw PreconditionError("measure lives on a different group");
    return Element<K>(ga.hopf.algebra, mu.weights);
}

/// The Haar idempotent gamma = |G|^-1 sum_g b_g and the ideal splitting
/// A = ker(kappa) (+) K*gamma, all identities re-verified exactly.
template <class K>
struct HaarSplit {
    Element<K> gamma;
    std::vector<Vec<K>> augmentation_ideal_basis;  // I = ker kappa
    std::vector<Vec<K>> minimal_ideal_basis;       // J = K*gamma
    Matrix<K> project_I;
    Matrix<K> project_J;
};

template <class K>
HaarSplit<K> haar_split(const GroupAlgebra<K>& ga) {
    const int n = ga.group.order;
    const auto& alg = ga.hopf.algebra;
    Element<K> gamma(alg, Vec<K>(n, K(1) / K(n)));
    if (gamma * gamma != gamma) throw InternalError("Haar element is not idempotent");
    for (int g = 0; g < n; ++g)
        if (ga.eta(g) * gamma != gamma || gamma * ga.eta(g) != gamma)
            throw InternalError("Haar element is not absorbing under the group basis");
    if (counit_of(ga.hopf, gamma) != K(1)) throw InternalError("Haar element has counit != 1");

    Matrix<K> kappa_row(1, n);
    for (int i = 0; i < n; ++i) kappa_row.at(0, i) = ga.hopf.coalgebra.counit[i];
    std::vector<Vec<K>> i_basis = kernel_basis(kappa_row);
    if (static_cast<int>(i_basis.size()) != n - 1)
        throw InternalError("augmentation ideal has the wrong dimension");

    // Direct sum: I + J spans, and x*gamma = kappa(x)*gamma for all basis x.
    SpanBasis<K> whole(n);
    for (const auto& v : i_basis) whole.insert(v);
    if (!whole.insert(gamma.coeffs()) || whole.rank() != n)
        throw InternalError("I and K*gamma do not form a direct sum decomposition");
    for (int i = 0; i < n; ++i) {
        Element<K> x = basis_element(alg, i);
        Element<K> expect = ga.hopf.coalgebra.counit[i] * gamma;
        if (x * gamma != expect || gamma * x != expect)
            throw InternalError("gamma is not the absorbing zero of the augmentation fiber");
    }
    // P_J(x) = kappa(x) gamma, P_I = id - P_J.
    Matrix<K> pj(n, n), pi(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            pj.at(i, j) = ga.hopf.coalgebra.counit[j] * gamma.coeffs()[i];
            pi.at(i, j) = (i == j ? K(1) : K(0)) - pj.at(i, j);
        }
    std::vector<Vec<K>> j_basis{gamma.coeffs()};
    return {std::move(gamma), std::move(i_basis), std::move(j_basis), std::move(pi), std::move(pj)};
}

/// x* = sigma(conjugate coefficients of x): the involution of the complex
/// group algebra.  Over the rationals it would degenerate to the antipode,
/// so that case is rejected.
template <class K>
Element<K> involution(const GroupAlgebra<K>& ga, const Element<K>& x) {
    if constexpr (!FieldTraits<K>::has_conjugation) {
        throw PreconditionError(
            "involution needs the Gaussian-rational field; over Q it degenerates to the antipode");
    } else {
        if (x.algebra() != ga.hopf.algebra) throw PreconditionError("element not in this group algebra");
        Vec<K> conj(x.coeffs().size());
        for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = FieldTraits<K>::conjugate(x.coeffs()[i]);
        return apply_antipode(ga.hopf, Element<K>(ga.hopf.algebra, std::move(conj)));
    }
}

/// K[GxH] ~ K[G] (x) K[H]: both directions as explicit matrices, verified
/// mutually inverse Hopf morphisms.
template <class K>
struct MultiplicativityIso {
    GroupSpec product_group_spec;
    GroupAlgebra<K> product_algebra;  // K[GxH]
    HopfAlgebra<K> tensor_algebra;    // K[G] (x) K[H]
    Matrix<K> alpha;                  // K[GxH] -> K[G](x)K[H]
    Matrix<K> beta;                   // K[G](x)K[H] -> K[GxH]
};

namespace detail {

template <class K>
bool is_hopf_morphism(const HopfAlgebra<K>& src, const HopfAlgebra<K>& dst, const Matrix<K>& m) {
    const int n = src.dim();
    std::vector<Vec<K>> img(n);
    for (int i = 0; i < n; ++i) img[i] = apply_sparse(m, unit_vec<K>(n, i));
    if (apply_sparse(m, src.algebra->unit()) != dst.algebra->unit()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<K> lhs(dst.dim(), K(0));
            for (const auto& [k, c] : src.algebra->structure().product(i, j))
                for (int r = 0; r < dst.dim(); ++r) lhs[r] = lhs[r] + c * img[k][r];
            if (lhs != mult_coeffs(dst.algebra->structure(), img[i], img[j])) return false;
        }
    for (int i = 0; i < n; ++i) {
        // (m (x) m) Delta_src(b_i) = Delta_dst(m b_i)
        Tensor2<K> lhs;
        for (const auto& [j, k, c] : src.coalgebra.delta[i])
            for (int a : nonzero_indices(img[j]))
                for (int b : nonzero_indices(img[k]))
                    tensor_add(lhs, pack2(dst.dim(), a, b), c * img[j][a] * img[k][b]);
        tensor_purge(lhs);
        Tensor2<K> rhs = delta_of_vec(dst.coalgebra, img[i]);
        if (lhs != rhs) return false;
        K kap(0);
        for (int a : nonzero_indices(img[i])) kap = kap + img[i][a] * dst.coalgebra.counit[a];
        if (kap != src.coalgebra.counit[i]) return false;
        if (apply_sparse(m, apply_sparse(src.antipode, unit_vec<K>(n, i))) !=
            apply_sparse(dst.antipode, img[i]))
            return false;
    }
    return true;
}

}  // namespace detail

template <class K>
MultiplicativityIso<K> multiplicativity_iso(const GroupSpec& g, const GroupSpec& h) {
    GroupSpec gh = product_group(g, h);
    GroupAlgebra<K> kgh = build_group_algebra<K>(gh);
    HopfAlgebra<K> tens = hopf_tensor(build_group_algebra<K>(g).hopf, build_group_algebra<K>(h).hopf);
    const int n = gh.order;
    // Both bases are indexed by (g, h) |-> g*|H| + h, so alpha and beta are
    // the identity in coordinates; they are still constructed and verified
    // as explicit matrices.
    Matrix<K> alpha = Matrix<K>::identity(n);
    Matrix<K> beta = Matrix<K>::identity(n);
    if (alpha * beta != Matrix<K>::identity(n) || beta * alpha != Matrix<K>::identity(n))
        throw InternalError("alpha and beta are not mutually inverse");
    if (!detail::is_hopf_morphism(kgh.hopf, tens, alpha) ||
        !detail::is_hopf_morphism(tens, kgh.hopf, beta))
        throw InternalError("alpha/beta are not Hopf algebra morphisms");
    return {std::move(gh), std::move(kgh), std::move(tens), std::move(alpha), std::move(beta)};
}

}  // namespace gk
