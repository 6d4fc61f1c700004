#include <catch2/catch_amalgamated.hpp>

#include "grouplike_kit/group_algebra.hpp"
#include "grouplike_kit/serialize.hpp"
#include "grouplike_kit/spectrum.hpp"
#include "grouplike_kit/standard_algebras.hpp"
#include "test_support.hpp"

using gk::Element;
using gk::GaussianRational;
using gk::Rational;
using gk::Vec;

TEST_CASE("verify_hopf: group algebras pass, a wrong antipode is witnessed") {
    auto ga = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2"));
    CHECK(gk::verify_hopf(ga.hopf).passed());

    gk::HopfAlgebra<Rational> broken = ga.hopf;
    broken.antipode = gk::Matrix<Rational>(2, 2);
    broken.antipode.at(0, 0) = Rational(1);
    broken.antipode.at(0, 1) = Rational(1);  // sigma(g) = e
    auto report = gk::verify_hopf(broken);
    REQUIRE(!report.passed());
    bool witnessed = false;
    for (const auto& v : report.violations)
        if ((v.axiom == "antipode-left" || v.axiom == "antipode-right") && v.witness == std::vector<int>{1})
            witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("verify_hopf on the dual numbers: only the x^2 multiplicativity defect") {
    // Delta(x)^2 = 2 x(x)x but Delta(x^2) = Delta(0) = 0: in characteristic
    // zero this single bialgebra axiom must fail, and nothing else may.
    auto report = gk::verify_hopf(gk::dual_numbers_hopf<Rational>());
    REQUIRE(!report.passed());
    REQUIRE(report.total_violations == 1);
    CHECK(report.violations[0].axiom == "comultiplication-multiplicative");
    CHECK(report.violations[0].witness == std::vector<int>{1, 1});
}

TEST_CASE("verify_hopf: broken comultiplication is reported as data") {
    auto h = gk::dual_numbers_hopf<Rational>();
    // redefine Delta(x) = x (x) x: breaks the counit law, not an exception
    std::vector<std::vector<std::tuple<int, int, Rational>>> delta(2);
    delta[0].emplace_back(0, 0, Rational(1));
    delta[1].emplace_back(1, 1, Rational(1));
    gk::HopfAlgebra<Rational> bad =
        gk::make_hopf(h.algebra, gk::make_coalgebra(2, std::move(delta), h.coalgebra.counit),
                      h.antipode);
    auto report = gk::verify_hopf(bad);
    REQUIRE(!report.passed());
    bool counit_violation = false;
    for (const auto& v : report.violations)
        if (v.axiom == "counit-left" || v.axiom == "counit-right") counit_violation = true;
    CHECK(counit_violation);
}

TEST_CASE("spec_chars: products of fields, function algebras, nilpotents") {
    auto q2 = gk::direct_product<Rational>(
        {gk::build_group_algebra<Rational>(gk::preset_group("cyclic:1")).hopf.algebra,
         gk::build_group_algebra<Rational>(gk::preset_group("cyclic:1")).hopf.algebra});
    auto chars = gk::spec_chars(q2);
    REQUIRE(chars.size() == 2);
    CHECK(chars[0] == Vec<Rational>{Rational(0), Rational(1)});
    CHECK(chars[1] == Vec<Rational>{Rational(1), Rational(0)});

    auto c3 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:3"));
    auto fun = gk::representative_dual(c3);
    auto point_evals = gk::spec_chars(fun.algebra);
    REQUIRE(point_evals.size() == 3);
    for (const auto& chi : point_evals) {
        int nonzero = 0;
        for (const auto& v : chi)
            if (v != 0) {
                ++nonzero;
                CHECK(v == 1);
            }
        CHECK(nonzero == 1);
    }

    auto dual_line = gk::make_quotient_ring(gk::poly_from_text<Rational>("0,0,1"));
    auto nil_chars = gk::spec_chars(dual_line.algebra);
    REQUIRE(nil_chars.size() == 1);
    CHECK(nil_chars[0] == Vec<Rational>{Rational(1), Rational(0)});  // X |-> 0
}

TEST_CASE("spec_chars kills the commutator ideal: K[S3] has two characters") {
    auto s3 = gk::build_group_algebra<Rational>(gk::preset_group("symmetric:3"));
    auto chars = gk::spec_chars(s3.hopf.algebra);
    // trivial and sign characters only
    REQUIRE(chars.size() == 2);
    for (const auto& chi : chars)
        for (const auto& v : chi) CHECK((v == 1 || v == -1));
}

TEST_CASE("spec_chars: simple noncommutative algebras have no characters") {
    // Commutators of M2(Q) generate everything, so Spec is empty.
    CHECK(gk::spec_chars(gk::matrix_algebra<Rational>(2)).empty());
    // Upper-triangular 2x2 matrices: two characters, the diagonal entries.
    auto chars = gk::spec_chars(gk::upper_triangular_algebra<Rational>(2));
    REQUIRE(chars.size() == 2);  // basis E11, E12, E22
    CHECK(chars[0] == Vec<Rational>{Rational(0), Rational(0), Rational(1)});
    CHECK(chars[1] == Vec<Rational>{Rational(1), Rational(0), Rational(0)});
}

TEST_CASE("spec_chars of a direct product is the union of factor characters") {
    auto c2 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2")).hopf.algebra;
    auto dual_line = gk::make_quotient_ring(gk::poly_from_text<Rational>("0,0,1")).algebra;
    auto prod = gk::direct_product<Rational>({c2, dual_line});
    auto chars = gk::spec_chars(prod);
    REQUIRE(chars.size() == 3);  // two from Q[C2], one from Q[X]/(X^2)
    for (const auto& chi : chars) {
        // each character is supported on exactly one block
        bool left = chi[0] != 0 || chi[1] != 0;
        bool right = chi[2] != 0 || chi[3] != 0;
        CHECK(left != right);
    }
}

TEST_CASE("grouplikes: K[C3] recovers the group basis") {
    auto c3 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:3"));
    auto gl = gk::grouplikes(c3.hopf);
    REQUIRE(gl.order() == 3);
    for (int i = 0; i < 3; ++i) {
        int hot = -1;
        for (int j = 0; j < 3; ++j)
            if (gl.elements[i].coeffs()[j] != 0) hot = j;
        CHECK(gl.elements[i].coeffs() == gk::unit_vec<Rational>(3, hot));
    }
    CHECK(gl.table[gl.identity][1] == 1);
}

TEST_CASE("grouplikes of function algebras match Hom(G, units)") {
    auto c3 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:3"));
    CHECK(gk::grouplikes(gk::representative_dual(c3)).order() == 1);

    auto c2 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2"));
    auto gl2 = gk::grouplikes(gk::representative_dual(c2));
    REQUIRE(gl2.order() == 2);
    CHECK(gl2.elements[0].coeffs() == Vec<Rational>{Rational(1), Rational(-1)});
    CHECK(gl2.elements[1].coeffs() == Vec<Rational>{Rational(1), Rational(1)});

    auto c4 = gk::build_group_algebra<GaussianRational>(gk::preset_group("cyclic:4"));
    auto gl4 = gk::grouplikes(gk::representative_dual(c4));
    REQUIRE(gl4.order() == 4);
    // the four characters take values in the fourth roots of unity
    GaussianRational i{Rational(0), Rational(1)};
    bool found_i = false;
    for (const auto& x : gl4.elements) {
        CHECK(x.coeffs()[0] == GaussianRational(1));  // value at the identity
        if (x.coeffs()[1] == i) found_i = true;
    }
    CHECK(found_i);
}

TEST_CASE("grouplikes of K^G count the characters of the abelianization") {
    // |Gamma(K^G)| = |Hom(G, {1,-1})| over Q: 4 for D4 and Q8, 1 for A4.
    auto count = [](const char* name) {
        auto ga = gk::build_group_algebra<Rational>(gk::preset_group(name));
        return gk::grouplikes(gk::representative_dual(ga)).order();
    };
    CHECK(count("dihedral:4") == 4);
    CHECK(count("quaternion8") == 4);
    CHECK(count("alternating:4") == 1);
}

TEST_CASE("primitives: group algebras have none, the dual numbers have x") {
    for (const char* name : {"cyclic:2", "symmetric:3"}) {
        auto ga = gk::build_group_algebra<Rational>(gk::preset_group(name));
        CHECK(gk::primitives(ga.hopf).dim() == 0);
    }
    auto dn = gk::dual_numbers_hopf<Rational>();
    auto p = gk::primitives(dn);
    REQUIRE(p.dim() == 1);
    CHECK(p.basis[0].coeffs() == Vec<Rational>{Rational(0), Rational(1)});

    auto c2 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2"));
    auto tensor = gk::hopf_tensor(c2.hopf, c2.hopf);
    CHECK(gk::primitives(tensor).dim() == 0);
}

TEST_CASE("dualize: transposed tensors, double dual, dual axioms") {
    auto c2 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2"));
    auto dual = gk::dualize(c2.hopf);
    // pointwise multiplication: phi_i phi_j = delta_ij phi_i
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto prod = dual.algebra->structure().product(i, j);
            if (i == j) {
                REQUIRE(prod.size() == 1);
                CHECK(prod[0] == std::pair(i, Rational(1)));
            } else {
                CHECK(prod.empty());
            }
        }
    // counit of the dual = evaluation at 1 = coefficient of the identity
    CHECK(dual.coalgebra.counit == c2.hopf.algebra->unit());
    CHECK(gk::verify_hopf(dual).passed());

    auto s3 = gk::build_group_algebra<Rational>(gk::preset_group("symmetric:3"));
    CHECK(gk::verify_hopf(gk::dualize(s3.hopf)).passed());
    auto dd = gk::dualize(gk::dualize(s3.hopf));
    gk::Json da = gk::algebra_to_json(dd.algebra), sa = gk::algebra_to_json(s3.hopf.algebra);
    da.erase("labels");
    sa.erase("labels");  // the double dual does not carry basis labels
    CHECK(da == sa);
    CHECK(dd.coalgebra.counit == s3.hopf.coalgebra.counit);
    CHECK(dd.antipode == s3.hopf.antipode);
}

TEST_CASE("grouplikes agree with spec_chars of the dual algebra") {
    auto c3 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:3"));
    auto gl = gk::grouplikes(c3.hopf);
    auto chars = gk::spec_chars(gk::dual_algebra_of_coalgebra(c3.hopf.coalgebra));
    REQUIRE(gl.order() == static_cast<int>(chars.size()));
    for (int i = 0; i < gl.order(); ++i) CHECK(gl.elements[i].coeffs() == chars[i]);
}

TEST_CASE("grouplike_span: full for K[G], constants for K^C3, full for K^C2") {
    auto c3 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:3"));
    auto span3 = gk::grouplike_span(c3.hopf);
    CHECK(span3.is_all);
    CHECK(span3.dim() == 3);

    auto fun3 = gk::grouplike_span(gk::representative_dual(c3));
    CHECK(!fun3.is_all);
    CHECK(fun3.dim() == 1);

    auto c2 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2"));
    auto fun2 = gk::grouplike_span(gk::representative_dual(c2));
    CHECK(fun2.is_all);
    CHECK(fun2.dim() == 2);
}

TEST_CASE("hopf serialization invariants: conventions stay fixed") {
    // Delta tensor lists (source, left leg, right leg) sorted by (i, j, k).
    auto c2 = gk::build_group_algebra<Rational>(gk::preset_group("cyclic:2"));
    auto j = gk::hopf_to_json(c2.hopf);
    REQUIRE(j.at("comultiplication").size() == 2);
    CHECK(j.at("comultiplication").at(0) == gk::Json::array({0, 0, 0, "1", "1"}));
    CHECK(j.at("comultiplication").at(1) == gk::Json::array({1, 1, 1, "1", "1"}));
}
