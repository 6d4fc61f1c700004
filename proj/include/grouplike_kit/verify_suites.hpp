#pragma once

// The acceptance suites behind `grouplike-kit verify`: one suite per
// criterion, every check exact unless a numeric tolerance is stated here.

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grouplike_kit/exp_lie.hpp"
#include "grouplike_kit/group_algebra.hpp"
#include "grouplike_kit/quotient_ring.hpp"
#include "grouplike_kit/standard_algebras.hpp"

namespace gk {

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::string statement;
    std::vector<CaseResult> cases;

    bool passed() const {
        for (const auto& c : cases)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline const std::vector<std::string>& acceptance_presets() {
    static const std::vector<std::string> presets = {
        "cyclic:1", "cyclic:2",    "cyclic:3",    "cyclic:4",      "klein4",
        "symmetric:3", "dihedral:4", "quaternion8", "alternating:4", "alternating:5"};
    return presets;
}

class SuiteRecorder {
public:
    explicit SuiteRecorder(SuiteResult& out) : out_(out) {}

    void run(const std::string& name, const std::function<void()>& body) {
        CaseResult c{name, false, ""};
        try {
            body();
            c.passed = true;
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        out_.cases.push_back(std::move(c));
    }

    void check(const std::string& name, bool ok, const std::string& why_failed = "") {
        out_.cases.push_back({name, ok, ok ? "" : why_failed});
    }

private:
    SuiteResult& out_;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

template <class K>
K random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    Rational re(num(rng), den(rng));
    if constexpr (FieldTraits<K>::has_conjugation) {
        return K{re, Rational(num(rng), den(rng))};
    } else {
        return re;
    }
}

template <class K>
Element<K> random_element(const AlgebraPtr<K>& alg, std::mt19937& rng) {
    Vec<K> c(alg->dim());
    for (auto& v : c) v = random_scalar<K>(rng);
    return Element<K>(alg, std::move(c));
}

template <class K>
Element<K> random_unit(const AlgebraPtr<K>& alg, std::mt19937& rng) {
    for (int tries = 0; tries < 200; ++tries) {
        Element<K> x = random_element(alg, rng);
        if (!is_zero(delta(x))) return x;
    }
    throw InternalError("failed to sample a unit");
}

inline double rel_err(double got, double want) {
    double denom = std::max(1.0, std::abs(want));
    return std::abs(got - want) / denom;
}

// Deterministic pool of associative algebras of dimension 2..5.
inline std::vector<AlgebraPtr<Rational>> random_algebra_pool() {
    std::vector<AlgebraPtr<Rational>> pool;
    for (int n = 2; n <= 5; ++n)
        pool.push_back(build_group_algebra<Rational>(preset_group("cyclic:" + std::to_string(n)))
                           .hopf.algebra);
    pool.push_back(build_group_algebra<Rational>(preset_group("klein4")).hopf.algebra);
    pool.push_back(upper_triangular_algebra<Rational>(2));  // dim 3
    pool.push_back(matrix_algebra<Rational>(2));            // dim 4
    for (int d = 1; d <= 4; ++d) pool.push_back(square_zero_extension<Rational>(d));
    std::mt19937 rng(0x616c6721u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int deg = 2; deg <= 5; ++deg) {
        std::vector<Rational> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(coeff(rng));
        c.emplace_back(1);
        pool.push_back(make_quotient_ring(Poly<Rational>(std::move(c))).algebra);
    }
    return pool;
}

}  // namespace detail

// ---- criterion 1 ----------------------------------------------------------
inline SuiteResult suite_hopf_axioms() {
    SuiteResult out{"hopf-axioms",
                    "verify_hopf passes exactly for K[G] over all presets and their duals", {}};
    detail::SuiteRecorder rec(out);
    for (const auto& name : detail::acceptance_presets()) {
        rec.run(name, [&] {
            GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group(name));
            HopfReport r = verify_hopf(ga.hopf);
            detail::require(r.passed(), "K[G] violates an axiom: " + r.summary());
            HopfReport rd = verify_hopf(dualize(ga.hopf));
            detail::require(rd.passed(), "dual of K[G] violates an axiom: " + rd.summary());
        });
    }
    return out;
}

// ---- criterion 2 ----------------------------------------------------------
inline SuiteResult suite_tannaka() {
    SuiteResult out{"tannaka",
                    "grouplikes(K[G]) = |G| independent elements with table isomorphic to G; "
                    "alternating:5 under 60 s", {}};
    detail::SuiteRecorder rec(out);
    for (const auto& name : detail::acceptance_presets()) {
        rec.run(name, [&] {
            auto start = std::chrono::steady_clock::now();
            GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group(name));
            TannakaResult<Rational> t = tannaka_recover(ga);
            detail::require(t.grouplikes.order() == ga.group.order, "grouplike count mismatch");
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (name == "alternating:5")
                detail::require(secs < 60.0,
                                "alternating:5 roundtrip took " + std::to_string(secs) + " s (cap 60)");
        });
    }
    return out;
}

// ---- criterion 3 ----------------------------------------------------------
inline SuiteResult suite_spectrum() {
    SuiteResult out{"spectrum", "spec_chars(K^G) is exactly the |G| point evaluations", {}};
    detail::SuiteRecorder rec(out);
    for (const auto& name : detail::acceptance_presets()) {
        rec.run(name, [&] {
            GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group(name));
            HopfAlgebra<Rational> fun = representative_dual(ga);
            std::vector<Vec<Rational>> chars = spec_chars(fun.algebra);
            const int n = ga.group.order;
            detail::require(static_cast<int>(chars.size()) == n, "character count != |G|");
            // Point evaluations are the standard basis vectors in the
            // indicator-function coordinates.
            std::vector<bool> seen(n, false);
            for (const auto& chi : chars) {
                int hot = -1;
                for (int i = 0; i < n; ++i) {
                    if (chi[i] == Rational(0)) continue;
                    detail::require(hot < 0 && chi[i] == Rational(1),
                                    "character is not a point evaluation");
                    hot = i;
                }
                detail::require(hot >= 0 && !seen[hot], "duplicate or empty point evaluation");
                seen[hot] = true;
            }
        });
    }
    return out;
}

// ---- criterion 4 ----------------------------------------------------------
inline SuiteResult suite_function_grouplikes() {
    SuiteResult out{"function-grouplikes",
                    "Gamma(K^A5) = {1}; |Gamma(K^C2)| = 2 over Q; |Gamma(K^C4)| = 4 over Q(i)", {}};
    detail::SuiteRecorder rec(out);
    rec.run("Q^alternating:5", [&] {
        GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group("alternating:5"));
        HopfAlgebra<Rational> fun = representative_dual(ga);
        GrouplikeSet<Rational> gl = grouplikes(fun);
        detail::require(gl.order() == 1, "expected exactly the trivial grouplike");
        detail::require(gl.elements[0] == algebra_unit(fun.algebra),
                        "the unique grouplike is not the constant-one function");
    });
    rec.run("Q^cyclic:2", [&] {
        GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group("cyclic:2"));
        detail::require(grouplikes(representative_dual(ga)).order() == 2, "|Hom(C2,{+-1})| = 2");
    });
    rec.run("Qi^cyclic:4", [&] {
        GroupAlgebra<GaussianRational> ga =
            build_group_algebra<GaussianRational>(preset_group("cyclic:4"));
        detail::require(grouplikes(representative_dual(ga)).order() == 4,
                        "|Hom(C4, fourth roots of unity)| = 4");
    });
    return out;
}

// ---- criterion 5 ----------------------------------------------------------
inline SuiteResult suite_epsilon() {
    SuiteResult out{"epsilon",
                    "epsilon roundtrip: iso for K[G] and K^C2; image = 1-dim span for K^C3", {}};
    detail::SuiteRecorder rec(out);
    for (const auto& name : detail::acceptance_presets()) {
        rec.run("Q[" + name + "]", [&] {
            GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group(name));
            EpsilonReport r = epsilon_roundtrip(ga.hopf);
            detail::require(r.eps_is_iso && r.gamma_order == ga.group.order,
                            "epsilon is not an isomorphism on a group algebra");
        });
    }
    rec.run("Q^cyclic:2", [&] {
        GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group("cyclic:2"));
        EpsilonReport r = epsilon_roundtrip(representative_dual(ga));
        detail::require(r.eps_is_iso && r.gamma_order == 2 && r.span_dim == 2,
                        "K^C2 should be spanned by its two characters");
    });
    rec.run("Q^cyclic:3", [&] {
        GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group("cyclic:3"));
        EpsilonReport r = epsilon_roundtrip(representative_dual(ga));
        detail::require(!r.eps_is_iso && r.gamma_order == 1 && r.span_dim == 1,
                        "K^C3 should have a one-dimensional grouplike span");
    });
    return out;
}

// ---- criterion 6 ----------------------------------------------------------
inline SuiteResult suite_primitives() {
    SuiteResult out{"primitives",
                    "primitives(K[G]) = 0 for all presets; dual numbers have span{x}; kappa = 0", {}};
    detail::SuiteRecorder rec(out);
    for (const auto& name : detail::acceptance_presets()) {
        rec.run("Q[" + name + "]", [&] {
            GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group(name));
            detail::require(primitives(ga.hopf).dim() == 0, "a group algebra has no primitives");
        });
    }
    rec.run("dual-numbers", [&] {
        HopfAlgebra<Rational> h = dual_numbers_hopf<Rational>();
        PrimitiveSpace<Rational> p = primitives(h);
        detail::require(p.dim() == 1, "expected a one-dimensional primitive space");
        detail::require(p.basis[0].coeffs() == Vec<Rational>{Rational(0), Rational(1)},
                        "the primitive line is span{x}");
        detail::require(counit_of(h, p.basis[0]) == Rational(0), "primitive with nonzero counit");
    });
    return out;
}

// ---- criterion 7 ----------------------------------------------------------
inline SuiteResult suite_multiplicativity() {
    SuiteResult out{"multiplicativity",
                    "K[GxH] ~ K[G](x)K[H]: alpha and beta compose to the identity exactly", {}};
    detail::SuiteRecorder rec(out);
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"cyclic:2", "cyclic:3"}, {"symmetric:3", "cyclic:2"}, {"cyclic:2", "cyclic:2"}};
    for (const auto& pair : pairs) {
        const std::string& a = pair.first;
        const std::string& b = pair.second;
        rec.run(a + " x " + b, [&] {
            MultiplicativityIso<Rational> iso =
                multiplicativity_iso<Rational>(preset_group(a), preset_group(b));
            const int n = iso.product_group_spec.order;
            detail::require(iso.alpha * iso.beta == Matrix<Rational>::identity(n) &&
                                iso.beta * iso.alpha == Matrix<Rational>::identity(n),
                            "roundtrip is not the identity");
        });
    }
    return out;
}

// ---- criterion 8 ----------------------------------------------------------
inline SuiteResult suite_crt() {
    SuiteResult out{"crt",
                    "CRT for X^2-1, X^3-X, X^4-1: inverse isomorphisms and exact idempotent laws", {}};
    detail::SuiteRecorder rec(out);
    using P = Poly<Rational>;
    auto lin = [](int c) { return P(std::vector<Rational>{Rational(c), Rational(1)}); };  // X + c
    const std::vector<std::pair<std::string, std::vector<P>>> moduli = {
        {"X^2-1", {lin(-1), lin(1)}},
        {"X^3-X", {P::x(), lin(-1), lin(1)}},
        {"X^4-1", {lin(-1), lin(1), P(std::vector<Rational>{Rational(1), Rational(0), Rational(1)})}}};
    for (const auto& modulus : moduli) {
        const std::string& name = modulus.first;
        const std::vector<P>& factors = modulus.second;
        rec.run(name, [&] {
            std::vector<std::pair<P, int>> fs;
            for (const auto& p : factors) fs.emplace_back(p, 1);
            CrtDecomposition<Rational> crt = crt_decompose(make_factored_modulus<Rational>(fs));
            const int n = crt.source.algebra->dim();
            detail::require(crt.forward.projection() * crt.backward.projection() ==
                                    Matrix<Rational>::identity(n) &&
                                crt.backward.projection() * crt.forward.projection() ==
                                    Matrix<Rational>::identity(n),
                            "forward/backward do not compose to the identity");
            Element<Rational> sum = zero_element(crt.source.algebra);
            for (const auto& e : crt.idempotents) sum = sum + e;
            detail::require(sum == algebra_unit(crt.source.algebra), "idempotents do not sum to 1");
            for (std::size_t i = 0; i < crt.idempotents.size(); ++i)
                for (std::size_t j = 0; j < crt.idempotents.size(); ++j) {
                    Element<Rational> prod = crt.idempotents[i] * crt.idempotents[j];
                    detail::require(i == j ? prod == crt.idempotents[i] : prod.is_zero_element(),
                                    "idempotent orthogonality fails");
                }
        });
    }
    return out;
}

// ---- criterion 9 ----------------------------------------------------------
inline SuiteResult suite_local_rings() {
    SuiteResult out{"local-rings",
                    "K[X]/(p^k): basis classification matches delta; geometric inverses exact "
                    "(50 random maximal-ideal elements per ring)", {}};
    detail::SuiteRecorder rec(out);
    using P = Poly<Rational>;
    const std::vector<std::pair<std::string, P>> ps = {
        {"X", P::x()},
        {"X-2", P(std::vector<Rational>{Rational(-2), Rational(1)})},
        {"X^2+1", P(std::vector<Rational>{Rational(1), Rational(0), Rational(1)})}};
    std::mt19937 rng(0x10ca1e5u);
    for (const auto& prime : ps)
        for (int k = 1; k <= 4; ++k) {
            const std::string& pname = prime.first;
            const P& p = prime.second;
            rec.run(pname + "^" + std::to_string(k), [&, k] {
                LocalRing<Rational> lr = make_local_ring(p, k);
                for (int m = 0; m < lr.ring.degree(); ++m) {
                    Element<Rational> bm = basis_element(lr.ring.algebra, m);
                    bool unit_by_class = local_classify(lr, bm) == LocalClass::Unit;
                    detail::require(unit_by_class == !is_zero(delta(bm)),
                                    "classification disagrees with delta on X^" + std::to_string(m));
                }
                std::vector<Vec<Rational>> mbasis = maximal_ideal_basis(lr);
                detail::require(static_cast<int>(mbasis.size()) == lr.maximal_ideal_dim(),
                                "maximal ideal dimension mismatch");
                for (int trial = 0; trial < 50; ++trial) {
                    Vec<Rational> c(lr.ring.algebra->dim(), Rational(0));
                    for (const auto& row : mbasis) {
                        Rational s = detail::random_scalar<Rational>(rng);
                        for (std::size_t i = 0; i < c.size(); ++i) c[i] += s * row[i];
                    }
                    Element<Rational> f(lr.ring.algebra, c);
                    Element<Rational> inv = geometric_inverse(lr, f);
                    detail::require((algebra_unit(lr.ring.algebra) - f) * inv ==
                                        algebra_unit(lr.ring.algebra),
                                    "(1-f) * geometric_inverse(f) != 1");
                }
            });
        }
    return out;
}

// ---- criterion 10 ---------------------------------------------------------
inline SuiteResult suite_unit_lifting() {
    SuiteResult out{"unit-lifting",
                    "30 random target units lift along every tower bond and every augmentation "
                    "K[G] -> K", {}};
    detail::SuiteRecorder rec(out);
    using P = Poly<Rational>;
    const std::vector<std::pair<std::string, P>> ps = {
        {"X", P::x()},
        {"X-2", P(std::vector<Rational>{Rational(-2), Rational(1)})},
        {"X^2+1", P(std::vector<Rational>{Rational(1), Rational(0), Rational(1)})}};
    std::mt19937 rng(0x11f71e5u);
    for (const auto& prime : ps) {
        const std::string& pname = prime.first;
        const P& p = prime.second;
        rec.run("tower " + pname, [&] {
            Tower<Rational> tower = build_tower(p, 4);
            for (const auto& bond : tower.bonds)
                for (int trial = 0; trial < 30; ++trial) {
                    Element<Rational> b = detail::random_unit(bond.target(), rng);
                    Element<Rational> a = unit_lift(bond, b);
                    detail::require(!is_zero(delta(a)) && bond.apply(a) == b,
                                    "lift is not a unit over the target");
                }
        });
    }
    for (const auto& name : detail::acceptance_presets()) {
        rec.run("augmentation Q[" + name + "]", [&] {
            GroupAlgebra<Rational> ga = build_group_algebra<Rational>(preset_group(name));
            const int n = ga.group.order;
            Matrix<Rational> kappa_row(1, n);
            for (int i = 0; i < n; ++i) kappa_row.at(0, i) = Rational(1);
            IdealBasis<Rational> aug = make_ideal(ga.hopf.algebra, kernel_basis(kappa_row));
            QuotientResult<Rational> q = quotient(ga.hopf.algebra, aug);
            detail::require(q.algebra->dim() == 1, "augmentation quotient is not one-dimensional");
            for (int trial = 0; trial < 30; ++trial) {
                Element<Rational> b = detail::random_unit(q.algebra, rng);
                Element<Rational> a = unit_lift(q.map, b);
                detail::require(!is_zero(delta(a)) && q.map.apply(a) == b,
                                "lift is not a unit over the target");
            }
        });
    }
    return out;
}

// ---- criterion 11 ---------------------------------------------------------
inline SuiteResult suite_unit_criterion() {
    SuiteResult out{"unit-criterion",
                    "on 100 random elements of random 2..5-dim algebras: invert succeeds iff "
                    "delta != 0, and delta is multiplicative", {}};
    detail::SuiteRecorder rec(out);
    rec.run("randomized", [&] {
        std::vector<AlgebraPtr<Rational>> pool = detail::random_algebra_pool();
        std::mt19937 rng(0xde17a5u);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            const AlgebraPtr<Rational>& alg = pool[pick(rng)];
            Element<Rational> x = detail::random_element(alg, rng);
            Element<Rational> y = detail::random_element(alg, rng);
            Rational dx = delta(x);
            InvertResult<Rational> inv = invert(x);
            detail::require(inv.is_unit() == !is_zero(dx), "invert disagrees with delta");
            if (!inv.is_unit())
                detail::require(!inv.kernel_witness.empty(), "non-unit without a kernel witness");
            detail::require(delta(x * y) == dx * delta(y), "delta is not multiplicative");
        }
    });
    return out;
}

// ---- criterion 12 ---------------------------------------------------------
inline SuiteResult suite_exponential() {
    SuiteResult out{"exponential",
                    "exact exp identities on nilpotents; exp_numeric within 1e-12 of exact and of "
                    "componentwise scalar exponentials", {}};
    detail::SuiteRecorder rec(out);
    std::mt19937 rng(0xe4bu);
    for (int k = 2; k <= 6; ++k) {
        rec.run("Q[X]/(X^" + std::to_string(k) + ")", [&, k] {
            std::vector<Rational> mod(static_cast<std::size_t>(k) + 1, Rational(0));
            mod[static_cast<std::size_t>(k)] = 1;
            QuotientRing<Rational> ring = make_quotient_ring(Poly<Rational>(std::move(mod)));
            Element<Rational> one = algebra_unit(ring.algebra);
            detail::require(exp_exact(zero_element(ring.algebra)) == one, "exp(0) != 1");
            for (int trial = 0; trial < 10; ++trial) {
                Vec<Rational> ca(ring.algebra->dim(), Rational(0)), cb = ca;
                for (int i = 1; i < k; ++i) {
                    ca[i] = detail::random_scalar<Rational>(rng);
                    cb[i] = detail::random_scalar<Rational>(rng);
                }
                Element<Rational> a(ring.algebra, ca), b(ring.algebra, cb);
                detail::require(exp_exact(a) * exp_exact(Rational(-1) * a) == one,
                                "exp(a)exp(-a) != 1");
                detail::require(exp_exact(a + b) == exp_exact(a) * exp_exact(b),
                                "exp(a+b) != exp(a)exp(b) for commuting nilpotents");
                detail::require(log_unipotent(exp_exact(a)) == a, "log(exp(a)) != a");
                NumericElement<Rational> num = exp_numeric(a, 1e-12);
                Element<Rational> exact = exp_exact(a);
                for (int i = 0; i < ring.algebra->dim(); ++i)
                    detail::require(detail::rel_err(num.coeffs[i],
                                                    exact.coeffs()[i].convert_to<double>()) <= 1e-12,
                                    "exp_numeric further than 1e-12 from exp_exact");
            }
        });
    }
    rec.run("QxQ componentwise", [&] {
        AlgebraPtr<Rational> qq = direct_product<Rational>(
            {make_quotient_ring(Poly<Rational>(std::vector<Rational>{Rational(0), Rational(1)})).algebra,
             make_quotient_ring(Poly<Rational>(std::vector<Rational>{Rational(0), Rational(1)})).algebra});
        for (int trial = 0; trial < 20; ++trial) {
            Element<Rational> v = detail::random_element(qq, rng);
            NumericElement<Rational> num = exp_numeric(v, 1e-12);
            for (int i = 0; i < 2; ++i)
                detail::require(detail::rel_err(num.coeffs[i],
                                                std::exp(v.coeffs()[i].convert_to<double>())) <= 1e-12,
                                "exp_numeric further than 1e-12 from the scalar exponential");
        }
    });
    return out;
}

// ---- criterion 13 ---------------------------------------------------------
inline SuiteResult suite_haar() {
    SuiteResult out{"haar",
                    "rho turns convolution into the product exactly; gamma is the absorbing "
                    "idempotent and A = I (+) K*gamma", {}};
    detail::SuiteRecorder rec(out);
    std::mt19937 rng(0x4aa7u);
    for (const auto& name : detail::acceptance_presets()) {
        rec.run(name, [&] {
            GroupSpec g = preset_group(name);
            GroupAlgebra<Rational> ga = build_group_algebra<Rational>(g);
            const int n = g.order;
            HaarSplit<Rational> hs = haar_split(ga);
            detail::require(static_cast<int>(hs.augmentation_ideal_basis.size()) == n - 1,
                            "dim I != |G| - 1");
            detail::require(hs.gamma * hs.gamma == hs.gamma, "gamma is not idempotent");
            for (int i = 0; i < n; ++i)
                detail::require(ga.eta(i) * hs.gamma == hs.gamma, "gamma is not absorbing");
            for (int trial = 0; trial < 10; ++trial) {
                Vec<Rational> wm(n), wn(n);
                for (auto& w : wm) w = detail::random_scalar<Rational>(rng);
                for (auto& w : wn) w = detail::random_scalar<Rational>(rng);
                MeasureVector<Rational> mu = make_measure(g, std::move(wm));
                MeasureVector<Rational> nu = make_measure(g, std::move(wn));
                detail::require(rho_embed(ga, convolve(mu, nu)) ==
                                    rho_embed(ga, mu) * rho_embed(ga, nu),
                                "rho does not take convolution to the product");
                Element<Rational> x = rho_embed(ga, mu);
                Rational kx = counit_of(ga.hopf, x);
                detail::require(x * hs.gamma == kx * hs.gamma && hs.gamma * x == kx * hs.gamma,
                                "x gamma != kappa(x) gamma");
            }
            // probability measures land in the kappa = 1 fiber
            Vec<Rational> w(n, Rational(1, n));
            MeasureVector<Rational> uniform = make_measure(g, w);
            detail::require(uniform.is_probability(), "uniform measure is not a probability");
            detail::require(counit_of(ga.hopf, rho_embed(ga, uniform)) == Rational(1),
                            "kappa(rho(probability)) != 1");
            detail::require(rho_embed(ga, uniform) == hs.gamma, "uniform probability is not gamma");
        });
    }
    return out;
}

// ---- criterion 14 ---------------------------------------------------------
inline SuiteResult suite_involution() {
    SuiteResult out{"involution",
                    "on Q(i)[C4] and Q(i)[Q8]: x** = x, (xy)* = y*x*, (cx)* = conj(c) x*, and "
                    "b_g b_g* = 1", {}};
    detail::SuiteRecorder rec(out);
    std::mt19937 rng(0x57a7u);
    for (const std::string name : {"cyclic:4", "quaternion8"}) {
        rec.run("Qi[" + name + "]", [&] {
            GroupAlgebra<GaussianRational> ga =
                build_group_algebra<GaussianRational>(preset_group(name));
            Element<GaussianRational> one = algebra_unit(ga.hopf.algebra);
            for (int g = 0; g < ga.group.order; ++g) {
                Element<GaussianRational> bg = ga.eta(g);
                detail::require(bg * involution(ga, bg) == one, "b_g b_g* != 1");
                detail::require(involution(ga, bg) == ga.eta(ga.group.inv(g)),
                                "b_g* != b_{g^-1}");
            }
            for (int trial = 0; trial < 15; ++trial) {
                Element<GaussianRational> x = detail::random_element(ga.hopf.algebra, rng);
                Element<GaussianRational> y = detail::random_element(ga.hopf.algebra, rng);
                GaussianRational c = detail::random_scalar<GaussianRational>(rng);
                detail::require(involution(ga, involution(ga, x)) == x, "x** != x");
                detail::require(involution(ga, x * y) == involution(ga, y) * involution(ga, x),
                                "(xy)* != y* x*");
                detail::require(involution(ga, c * x) == c.conj() * involution(ga, x),
                                "(cx)* != conj(c) x*");
            }
        });
    }
    return out;
}

inline const std::vector<std::string>& acceptance_suite_names() {
    static const std::vector<std::string> names = {
        "hopf-axioms",  "tannaka",        "spectrum",    "function-grouplikes", "epsilon",
        "primitives",   "multiplicativity", "crt",       "local-rings",         "unit-lifting",
        "unit-criterion", "exponential",  "haar",        "involution"};
    return names;
}

inline SuiteResult run_acceptance_suite(const std::string& name) {
    if (name == "hopf-axioms") return suite_hopf_axioms();
    if (name == "tannaka") return suite_tannaka();
    if (name == "spectrum") return suite_spectrum();
    if (name == "function-grouplikes") return suite_function_grouplikes();
    if (name == "epsilon") return suite_epsilon();
    if (name == "primitives") return suite_primitives();
    if (name == "multiplicativity") return suite_multiplicativity();
    if (name == "crt") return suite_crt();
    if (name == "local-rings") return suite_local_rings();
    if (name == "unit-lifting") return suite_unit_lifting();
    if (name == "unit-criterion") return suite_unit_criterion();
    if (name == "exponential") return suite_exponential();
    if (name == "haar") return suite_haar();
    if (name == "involution") return suite_involution();
    throw InputError("unknown verification suite '" + name + "'");
}

inline std::vector<SuiteResult> run_acceptance(const std::string& name_or_all) {
    std::vector<SuiteResult> results;
    if (name_or_all == "all") {
        for (const auto& n : acceptance_suite_names()) results.push_back(run_acceptance_suite(n));
    } else {
        results.push_back(run_acceptance_suite(name_or_all));
    }
    return results;
}

}  // namespace gk
