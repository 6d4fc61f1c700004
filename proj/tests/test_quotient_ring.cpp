#include <catch2/catch_amalgamated.hpp>

#include "grouplike_kit/group_algebra.hpp"
#include "grouplike_kit/quotient_ring.hpp"
#include "test_support.hpp"

using gk::Element;
using gk::Poly;
using gk::Rational;
using gk::Vec;

namespace {
Poly<Rational> qp(const char* text) { return gk::poly_from_text<Rational>(text); }
}  // namespace

TEST_CASE("quotient rings reduce modulo the modulus") {
    auto ring = gk::make_quotient_ring(qp("0,0,0,1"));  // X^3
    CHECK(ring.algebra->dim() == 3);
    Element<Rational> x = ring.from_poly(Poly<Rational>::x());
    CHECK((x * x * x).is_zero_element());
    CHECK(ring.to_poly(x * x) == qp("0,0,1"));
    CHECK_THROWS_AS(gk::make_quotient_ring(qp("0,0,0,2")), gk::InputError);  // non-monic
    CHECK_THROWS_AS(gk::make_quotient_ring(qp("5")), gk::InputError);        // degree 0
}

TEST_CASE("crt: (X-1)(X+1) with exact Bezout idempotents") {
    auto fm = gk::make_factored_modulus<Rational>({{qp("-1,1"), 1}, {qp("1,1"), 1}});
    auto crt = gk::crt_decompose(fm);
    REQUIRE(crt.idempotents.size() == 2);
    CHECK(crt.idempotents[0].coeffs() == Vec<Rational>{Rational(1, 2), Rational(1, 2)});   // (1+X)/2
    CHECK(crt.idempotents[1].coeffs() == Vec<Rational>{Rational(1, 2), Rational(-1, 2)});  // (1-X)/2
    CHECK(crt.forward.projection() * crt.backward.projection() == gk::Matrix<Rational>::identity(2));
    CHECK(crt.backward.projection() * crt.forward.projection() == gk::Matrix<Rational>::identity(2));
}

TEST_CASE("crt: single prime power is the identity decomposition") {
    auto crt = gk::crt_decompose(gk::make_factored_modulus<Rational>({{qp("0,1"), 2}}));
    REQUIRE(crt.idempotents.size() == 1);
    CHECK(crt.idempotents[0] == gk::algebra_unit(crt.source.algebra));
    CHECK(crt.forward.projection() == gk::Matrix<Rational>::identity(2));
}

TEST_CASE("crt: X^3 - X splits into three point factors") {
    auto fm = gk::make_factored_modulus<Rational>({{qp("0,1"), 1}, {qp("-1,1"), 1}, {qp("1,1"), 1}});
    auto crt = gk::crt_decompose(fm);
    CHECK(crt.product->dim() == 3);
    // forward(e_i) is the i-th block unit: evaluating idempotents at the roots.
    for (std::size_t i = 0; i < 3; ++i) {
        Element<Rational> img = crt.forward.apply(crt.idempotents[i]);
        CHECK(img.coeffs() == gk::unit_vec<Rational>(3, static_cast<int>(i)));
    }
    CHECK_THROWS_AS(gk::make_factored_modulus<Rational>({{qp("0,1"), 1}, {qp("0,1"), 2}}),
                    gk::InputError);  // not coprime
}

TEST_CASE("local rings classify units against the residue field") {
    auto lr2 = gk::make_local_ring(qp("0,1"), 2);  // Q[X]/(X^2)
    Element<Rational> x = lr2.ring.from_poly(Poly<Rational>::x());
    CHECK(gk::local_classify(lr2, x) == gk::LocalClass::MaximalIdealMember);
    CHECK(gk::local_classify(lr2, lr2.ring.from_poly(qp("2,1"))) == gk::LocalClass::Unit);

    auto lr3 = gk::make_local_ring(qp("0,1"), 3);
    CHECK(gk::local_classify(lr3, lr3.ring.from_poly(qp("1,1"))) == gk::LocalClass::Unit);

    // non-units are exactly the maximal ideal, of dimension (k-1) deg p
    CHECK(lr3.maximal_ideal_dim() == 2);
    std::mt19937 rng(21);
    for (int t = 0; t < 20; ++t) {
        auto e = gktest::random_element(lr3.ring.algebra, rng);
        bool unit = gk::local_classify(lr3, e) == gk::LocalClass::Unit;
        CHECK(unit == (gk::delta(e) != 0));
    }
}

TEST_CASE("geometric series inverts 1 - f exactly") {
    auto lr = gk::make_local_ring(qp("0,1"), 3);
    Element<Rational> x = lr.ring.from_poly(Poly<Rational>::x());
    CHECK(gk::geometric_inverse(lr, x).coeffs() ==
          Vec<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(gk::geometric_inverse(lr, gk::zero_element(lr.ring.algebra)) ==
          gk::algebra_unit(lr.ring.algebra));
    CHECK(gk::geometric_inverse(lr, x * x).coeffs() ==
          Vec<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK_THROWS_AS(gk::geometric_inverse(lr, gk::algebra_unit(lr.ring.algebra)),
                    gk::PreconditionError);
}

TEST_CASE("towers: level dims, bond kernels, irreducibility gate") {
    auto t1 = gk::build_tower(qp("0,1"), 3);
    REQUIRE(t1.levels.size() == 3);
    CHECK(t1.levels[0].ring.degree() == 1);
    CHECK(t1.levels[1].ring.degree() == 2);
    CHECK(t1.levels[2].ring.degree() == 3);
    CHECK(gk::kernel_basis(t1.bonds[0].projection()).size() == 1);  // deg p

    auto t2 = gk::build_tower(qp("1,0,1"), 2);  // X^2 + 1
    CHECK(t2.levels[0].ring.degree() == 2);
    CHECK(t2.levels[1].ring.degree() == 4);
    CHECK(gk::kernel_basis(t2.bonds[0].projection()).size() == 2);

    CHECK_THROWS_AS(gk::build_tower(qp("-1,0,1"), 2), gk::InputError);  // X^2-1 reducible
    CHECK_THROWS_AS(gk::build_tower(qp("-2,0,0,1"), 2), gk::InputError);  // needs attestation
    CHECK(gk::build_tower(qp("-2,0,0,1"), 2, true).levels.size() == 2);   // X^3-2 attested
}

TEST_CASE("tower bonds compose coherently and lift witnesses are units") {
    auto t = gk::build_tower(qp("-2,1"), 4);  // p = X - 2
    for (std::size_t i = 0; i + 1 < t.bonds.size(); ++i) {
        auto direct = gk::detail::power_basis_reduction(t.levels[i + 2].ring, t.levels[i].ring);
        CHECK(t.bonds[i].projection() * t.bonds[i + 1].projection() == direct);
    }
    REQUIRE(t.lift_witnesses.size() == 3);
    for (const auto& w : t.lift_witnesses) {
        CHECK(gk::delta(w.lifted_unit) != 0);
    }
}

TEST_CASE("tower elements: coherence is constructed and validated") {
    auto t = gk::build_tower(qp("0,1"), 3);
    auto te = gk::tower_element_from_poly(t, qp("1,1"));  // 1 + X at every level
    CHECK(te.level_coeffs[0] == Vec<Rational>{Rational(1)});
    CHECK(te.level_coeffs[2] == Vec<Rational>{Rational(1), Rational(1), Rational(0)});

    auto sq = gk::tower_multiply(t, te, te);  // (1+X)^2 truncated per level
    CHECK(sq.level_coeffs[1] == Vec<Rational>{Rational(1), Rational(2)});
    CHECK(sq.level_coeffs[2] == Vec<Rational>{Rational(1), Rational(2), Rational(1)});

    auto bad = te.level_coeffs;
    bad[0][0] = Rational(5);  // breaks coherence with level 2
    CHECK_THROWS_AS(gk::make_tower_element(t, bad), gk::InputError);
}

TEST_CASE("evaluate_universal: minimal polynomials and the induced morphism") {
    auto a = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2")).hopf.algebra;
    Element<Rational> one = gk::algebra_unit(a);
    auto u1 = gk::evaluate_universal(one, 4);
    CHECK(u1.minimal_polynomial == qp("-1,1"));  // X - 1

    Element<Rational> g(a, gk::unit_vec<Rational>(2, 1));
    auto ug = gk::evaluate_universal(g, 4);
    CHECK(ug.minimal_polynomial == qp("-1,0,1"));  // X^2 - 1
    // the induced map sends X to g
    CHECK(gk::detail::apply_sparse(ug.map, ug.domain.from_poly(Poly<Rational>::x()).coeffs()) ==
          g.coeffs());

    auto ring = gk::make_quotient_ring(qp("0,0,0,1"));
    auto ux = gk::evaluate_universal(ring.from_poly(Poly<Rational>::x()), 5);
    CHECK(ux.minimal_polynomial == qp("0,0,0,1"));  // X^3

    CHECK_THROWS_AS(gk::evaluate_universal(g, 1), gk::PreconditionError);
}

TEST_CASE("unit lifting along tower bonds succeeds on random units") {
    std::mt19937 rng(22);
    auto t = gk::build_tower(qp("1,0,1"), 3);
    for (const auto& bond : t.bonds)
        for (int trial = 0; trial < 10; ++trial) {
            Element<Rational> b = [&] {
                while (true) {
                    auto cand = gktest::random_element(bond.target(), rng);
                    if (gk::delta(cand) != 0) return cand;
                }
            }();
            Element<Rational> lift = gk::unit_lift(bond, b);
            CHECK(gk::delta(lift) != 0);
            CHECK(bond.apply(lift) == b);
        }
}
