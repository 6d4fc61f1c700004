#include <catch2/catch_amalgamated.hpp>

#include "grouplike_kit/group_algebra.hpp"
#include "grouplike_kit/quotient_ring.hpp"
#include "grouplike_kit/standard_algebras.hpp"
#include "test_support.hpp"

using gk::AlgebraPtr;
using gk::Element;
using gk::Matrix;
using gk::Rational;
using gk::Vec;

namespace {

AlgebraPtr<Rational> qc2() {
    return gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2")).hopf.algebra;
}

Element<Rational> el(const AlgebraPtr<Rational>& a, std::vector<int> c) {
    Vec<Rational> v(c.begin(), c.end());
    return Element<Rational>(a, std::move(v));
}

}  // namespace

TEST_CASE("construction rejects broken structure constants") {
    CHECK_THROWS_AS(
        [&] {
            gk::StructureTensor<Rational> bad(2);
            bad.add(0, 0, 0, Rational(1));
            // missing unit action on b_1
            return gk::FDAlgebra<Rational>::make(std::move(bad), gk::unit_vec<Rational>(2, 0));
        }(),
        gk::InputError);

    gk::StructureTensor<Rational> nonassoc(3);
    // b0 = unit; b1*b1 = b2, b1*b2 = b0, b2*b1 = 0: (b1 b1) b1 != b1 (b1 b1)
    for (int i = 0; i < 3; ++i) {
        nonassoc.add(0, i, i, Rational(1));
        if (i) nonassoc.add(i, 0, i, Rational(1));
    }
    nonassoc.add(1, 1, 2, Rational(1));
    nonassoc.add(1, 2, 0, Rational(1));
    CHECK_THROWS_AS(gk::FDAlgebra<Rational>::make(std::move(nonassoc), gk::unit_vec<Rational>(3, 0)),
                    gk::InputError);
}

TEST_CASE("multiply: group law, square-zero extension, unit law") {
    auto a = qc2();
    CHECK(el(a, {0, 1}) * el(a, {0, 1}) == el(a, {1, 0}));  // g*g = e

    // (v1, r1)(v2, r2) = (r1 v2 + r2 v1, r1 r2) with basis order (r, v)
    auto sz = gk::square_zero_extension<Rational>(1);
    CHECK(el(sz, {2, 1}) * el(sz, {4, 3}) == el(sz, {8, 10}));

    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        auto x = gktest::random_element(a, rng);
        CHECK(gk::algebra_unit(a) * x == x);
        CHECK(x * gk::algebra_unit(a) == x);
    }
    auto b = gk::square_zero_extension<Rational>(2);
    CHECK_THROWS_AS(el(b, {1, 0, 0}) * Element<Rational>(a, Vec<Rational>{Rational(1), Rational(0)}),
                    gk::PreconditionError);
}

TEST_CASE("left_regular: identity, swap matrix, linearity") {
    auto a = qc2();
    CHECK(gk::left_regular(gk::algebra_unit(a)) == Matrix<Rational>::identity(2));
    // L(g) swaps e and g: columns are g*e = g, g*g = e.
    Matrix<Rational> swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(gk::left_regular(el(a, {0, 1})) == swap);

    std::mt19937 rng(12);
    for (int t = 0; t < 10; ++t) {
        auto x = gktest::random_element(a, rng);
        auto y = gktest::random_element(a, rng);
        CHECK(gk::left_regular(x + y) == gk::left_regular(x) + gk::left_regular(y));
    }
}

TEST_CASE("delta: values on Q[C2] and multiplicativity") {
    auto a = qc2();
    CHECK(gk::delta(gk::algebra_unit(a)) == 1);
    CHECK(gk::delta(el(a, {1, 1})) == 0);
    CHECK(gk::delta(el(a, {2, 1})) == 3);

    std::mt19937 rng(13);
    auto ut = gk::upper_triangular_algebra<Rational>(2);
    for (int t = 0; t < 20; ++t) {
        auto x = gktest::random_element(ut, rng);
        auto y = gktest::random_element(ut, rng);
        CHECK(gk::delta(x * y) == gk::delta(x) * gk::delta(y));
    }
}

TEST_CASE("invert: two-sided inverses and kernel witnesses") {
    auto a = qc2();
    auto inv1 = gk::invert(gk::algebra_unit(a));
    REQUIRE(inv1.is_unit());
    CHECK(*inv1.inverse == gk::algebra_unit(a));

    auto inv2 = gk::invert(el(a, {2, 1}));
    REQUIRE(inv2.is_unit());
    CHECK(inv2.inverse->coeffs() == Vec<Rational>{Rational(2, 3), Rational(-1, 3)});

    auto bad = gk::invert(el(a, {1, 1}));
    REQUIRE(!bad.is_unit());
    REQUIRE(!bad.kernel_witness.empty());
    Matrix<Rational> lx = gk::left_regular(el(a, {1, 1}));
    for (const auto& w : bad.kernel_witness) {
        CHECK(!gk::vec_is_zero(w));
        CHECK(gk::vec_is_zero(lx.apply(w)));
    }
}

TEST_CASE("unit iff delta nonzero iff invert succeeds (randomized dims <= 5)") {
    std::mt19937 rng(14);
    std::vector<AlgebraPtr<Rational>> pool = {
        qc2(), gk::upper_triangular_algebra<Rational>(2), gk::matrix_algebra<Rational>(2),
        gk::square_zero_extension<Rational>(3),
        gk::build_group_algebra<Rational>(gk::preset_group("cyclic:5")).hopf.algebra};
    for (int t = 0; t < 100; ++t) {
        const auto& alg = pool[t % pool.size()];
        auto x = gktest::random_element(alg, rng);
        CHECK(gk::invert(x).is_unit() == (gk::delta(x) != 0));
    }
}

TEST_CASE("ideals: closure validation and ideal_closure") {
    auto a = qc2();
    // span{e - g} is the augmentation ideal of Q[C2]
    auto ideal = gk::make_ideal(a, {Vec<Rational>{Rational(1), Rational(-1)}});
    CHECK(ideal.rank() == 1);
    // span{e} is not an ideal (e*g = g escapes)
    CHECK_THROWS_AS(gk::make_ideal(a, {Vec<Rational>{Rational(1), Rational(0)}}), gk::InputError);
    // its two-sided closure is everything
    auto closure = gk::ideal_closure(a, {Vec<Rational>{Rational(1), Rational(0)}});
    CHECK(closure.rank() == 2);
}

TEST_CASE("quotient: trivial ideal, Q[X]/(X^2) -> Q, augmentation of Q[C2]") {
    auto a = qc2();
    auto trivial = gk::quotient(a, gk::IdealBasis<Rational>{a, {}});
    CHECK(trivial.algebra == a);
    CHECK(trivial.map.projection() == Matrix<Rational>::identity(2));

    auto ring = gk::make_quotient_ring(gk::poly_from_text<Rational>("0,0,1"));  // X^2
    auto qx = gk::quotient(ring.algebra,
                           gk::make_ideal(ring.algebra, {Vec<Rational>{Rational(0), Rational(1)}}));
    CHECK(qx.algebra->dim() == 1);
    // the surviving basis element squares to itself: the field Q
    CHECK(qx.algebra->structure().product(0, 0) ==
          std::vector<std::pair<int, Rational>>{{0, Rational(1)}});

    auto aug = gk::quotient(a, gk::make_ideal(a, {Vec<Rational>{Rational(1), Rational(-1)}}));
    CHECK(aug.algebra->dim() == 1);
    CHECK(aug.map.apply(el(a, {1, 1})).coeffs() == Vec<Rational>{Rational(2)});

    // an ideal containing the unit is rejected
    auto whole = gk::ideal_closure(a, {Vec<Rational>{Rational(1), Rational(0)}});
    CHECK_THROWS_AS(gk::quotient(a, whole), gk::PreconditionError);
}

TEST_CASE("unit_lift: direct section, perturbation schedule, error paths") {
    auto a = qc2();
    auto idmap = gk::QuotientMap<Rational>::identity_map(a);
    CHECK(gk::unit_lift(idmap, el(a, {2, 1})) == el(a, {2, 1}));

    // Tower bond Q[X]/(X^2) -> Q: the section representative is already a unit.
    auto tower = gk::build_tower(gk::Poly<Rational>::x(), 2);
    auto one = gk::algebra_unit(tower.levels[0].ring.algebra);
    CHECK(gk::unit_lift(tower.bonds[0], one).coeffs() == Vec<Rational>{Rational(1), Rational(0)});

    // Symmetric section (e+g)/2 forces the perturbation search.
    gk::StructureTensor<Rational> field(1);
    field.add(0, 0, 0, Rational(1));
    auto q = gk::FDAlgebra<Rational>::make(std::move(field), Vec<Rational>{Rational(1)});
    Matrix<Rational> proj(1, 2);
    proj.at(0, 0) = Rational(1);
    proj.at(0, 1) = Rational(1);
    Matrix<Rational> section(2, 1);
    section.at(0, 0) = Rational(1, 2);
    section.at(1, 0) = Rational(1, 2);
    auto qmap = gk::QuotientMap<Rational>::make(a, q, proj, section);
    Element<Rational> target(q, Vec<Rational>{Rational(1)});
    CHECK(gk::is_zero(gk::delta(qmap.lift_linear(target))));  // (e+g)/2 is singular
    Element<Rational> lifted = gk::unit_lift(qmap, target);
    CHECK(gk::delta(lifted) != 0);
    CHECK(qmap.apply(lifted) == target);

    Element<Rational> nonunit(q, Vec<Rational>{Rational(0)});
    CHECK_THROWS_AS(gk::unit_lift(qmap, nonunit), gk::PreconditionError);
}

TEST_CASE("unit_lift: joint perturbations where every axis line is singular") {
    // Q^3 onto its third coordinate: the fiber of 1 is {(t1, t2, 1)} with
    // delta = t1 t2, zero on both kernel axes but not jointly.
    auto field = [] {
        gk::StructureTensor<Rational> st(1);
        st.add(0, 0, 0, Rational(1));
        return gk::FDAlgebra<Rational>::make(std::move(st), Vec<Rational>{Rational(1)});
    };
    auto q3 = gk::direct_product<Rational>({field(), field(), field()});
    auto q1 = field();
    Matrix<Rational> proj(1, 3);
    proj.at(0, 2) = Rational(1);
    Matrix<Rational> section(3, 1);
    section.at(2, 0) = Rational(1);
    auto qmap = gk::QuotientMap<Rational>::make(q3, q1, proj, section);

    Element<Rational> target(q1, Vec<Rational>{Rational(1)});
    for (const auto& dir : gk::kernel_basis(proj))
        for (int t = -4; t <= 4; ++t) {
            Element<Rational> axis_cand =
                qmap.lift_linear(target) + (Rational(t) * Element<Rational>(q3, dir));
            CHECK(gk::is_zero(gk::delta(axis_cand)));  // the axis schedule cannot succeed
        }
    Element<Rational> lifted = gk::unit_lift(qmap, target);
    CHECK(gk::delta(lifted) != 0);
    CHECK(qmap.apply(lifted) == target);
}

TEST_CASE("nilradical: semisimple, nilpotent line, strict upper triangle") {
    auto c3 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:3")).hopf.algebra;
    CHECK(gk::nilradical(c3).rank() == 0);

    auto ring = gk::make_quotient_ring(gk::poly_from_text<Rational>("0,0,1"));
    auto nil = gk::nilradical(ring.algebra);
    REQUIRE(nil.rank() == 1);
    CHECK(nil.basis[0] == Vec<Rational>{Rational(0), Rational(1)});

    auto ut = gk::upper_triangular_algebra<Rational>(2);  // basis E11, E12, E22
    auto nut = gk::nilradical(ut);
    REQUIRE(nut.rank() == 1);
    CHECK(nut.basis[0] == Vec<Rational>{Rational(0), Rational(1), Rational(0)});

    // A/N has zero nilradical
    auto qres = gk::quotient(ut, nut);
    CHECK(gk::nilradical(qres.algebra).rank() == 0);
}

TEST_CASE("tensor product: identity object, component products") {
    auto a = qc2();
    auto one_dim = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:1")).hopf.algebra;
    auto at = gk::tensor_algebra(a, one_dim);
    CHECK(at->dim() == 2);
    CHECK(at->structure().product(1, 1) == a->structure().product(1, 1));

    auto tt = gk::tensor_algebra(a, a);  // basis e(x)e, e(x)g, g(x)e, g(x)g
    CHECK(tt->dim() == 4);
    Element<Rational> ge(tt, gk::unit_vec<Rational>(4, 2));
    Element<Rational> eg(tt, gk::unit_vec<Rational>(4, 1));
    Element<Rational> gg(tt, gk::unit_vec<Rational>(4, 3));
    CHECK(ge * eg == gg);
}

TEST_CASE("direct product: componentwise structure and block delta") {
    auto a = qc2();
    auto ut = gk::upper_triangular_algebra<Rational>(2);
    auto prod = gk::direct_product<Rational>({a, ut});
    CHECK(prod->dim() == 5);
    std::mt19937 rng(15);
    for (int t = 0; t < 10; ++t) {
        auto x = gktest::random_element(a, rng);
        auto y = gktest::random_element(ut, rng);
        Vec<Rational> joint = x.coeffs();
        joint.insert(joint.end(), y.coeffs().begin(), y.coeffs().end());
        CHECK(gk::delta(Element<Rational>(prod, joint)) == gk::delta(x) * gk::delta(y));
    }
}

TEST_CASE("commutator generators vanish exactly on commutative algebras") {
    CHECK(gk::commutator_generators(qc2()).empty());
    auto s3 = gk::build_group_algebra<Rational>(gk::preset_group("symmetric:3")).hopf.algebra;
    auto gens = gk::commutator_generators(s3);
    CHECK(!gens.empty());
    CHECK(gk::ideal_closure(s3, gens).rank() == 4);  // K[S3] = K[C2] x (2x2 block)
}
