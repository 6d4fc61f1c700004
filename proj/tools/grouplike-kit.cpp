// grouplike-kit: exact workbench for finite-dimensional Hopf algebras,
// group algebras and polynomial quotient towers.  All outputs are canonical
// JSON (sorted keys, normalized exact scalars).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grouplike_kit/grouplike_kit.hpp"

namespace {

using gk::GaussianRational;
using gk::Json;
using gk::Rational;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitInputInvalid = 2;
constexpr int kExitHopfViolation = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitInternal = 5;

struct IoOptions {
    std::string input_path;
    std::string inline_json;
    std::string output_path;
};

Json load_payload(const IoOptions& io) {
    if (!io.inline_json.empty()) return gk::parse_json(io.inline_json);
    if (io.input_path.empty()) throw gk::InputError("provide --input PATH or --json TEXT");
    std::ifstream in(io.input_path);
    if (!in) throw gk::InputError("cannot open input file '" + io.input_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return gk::parse_json(text);
}

void emit(const IoOptions& io, const Json& payload) {
    std::string text = gk::canonical_dump(payload);
    if (io.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(io.output_path);
    if (!out) throw gk::InputError("cannot open output file '" + io.output_path + "'");
    out << text;
}

template <class K>
Json grouplikes_payload(const gk::HopfAlgebra<K>& h) {
    gk::GrouplikeSet<K> gl = gk::grouplikes(h);
    Json elements = Json::array();
    for (const auto& x : gl.elements) elements.push_back(gk::detail::vec_to_json(x.coeffs()));
    Json table = Json::array();
    for (const auto& row : gl.table) table.push_back(row);
    return Json{{"count", gl.order()},
                {"elements", std::move(elements)},
                {"identity", gl.identity},
                {"inverse", gl.inverse},
                {"multiplication_table", std::move(table)}};
}

template <class K>
Json primitives_payload(const gk::HopfAlgebra<K>& h) {
    gk::PrimitiveSpace<K> p = gk::primitives(h);
    Json basis = Json::array();
    for (const auto& x : p.basis) basis.push_back(gk::detail::vec_to_json(x.coeffs()));
    return Json{{"dim", p.dim()}, {"basis", std::move(basis)}};
}

template <class K>
void gate_verify_hopf(const gk::HopfAlgebra<K>& h) {
    gk::HopfReport report = gk::verify_hopf(h);
    if (!report.passed()) throw gk::HopfAxiomError(report.summary());
}

struct FactorArg {
    std::string poly;
    int power = 1;
};

FactorArg parse_factor_arg(const std::string& text) {
    auto caret = text.rfind('^');
    if (caret == std::string::npos) return {text, 1};
    FactorArg f{text.substr(0, caret), 0};
    try {
        f.power = std::stoi(text.substr(caret + 1));
    } catch (...) {
        throw gk::InputError("bad exponent in factor '" + text + "'");
    }
    return f;
}

template <class K>
Json crt_payload(const std::vector<std::string>& factor_args, bool attested) {
    std::vector<std::pair<gk::Poly<K>, int>> factors;
    for (const auto& arg : factor_args) {
        FactorArg f = parse_factor_arg(arg);
        gk::Poly<K> p = gk::poly_from_text<K>(f.poly);
        if (p.degree() > 2 && !attested)
            throw gk::InputError("degree >= 3 factors need --attested-irreducible");
        factors.emplace_back(std::move(p), f.power);
    }
    gk::CrtDecomposition<K> crt = gk::crt_decompose(gk::make_factored_modulus<K>(std::move(factors)));
    Json fac = Json::array();
    for (const auto& ring : crt.factors)
        fac.push_back(Json{{"modulus", gk::poly_to_text(ring.modulus)}, {"dim", ring.degree()}});
    Json idem = Json::array();
    for (const auto& e : crt.idempotents) idem.push_back(gk::detail::vec_to_json(e.coeffs()));
    return Json{{"modulus", gk::poly_to_text(crt.source.modulus)},
                {"factors", std::move(fac)},
                {"idempotents", std::move(idem)},
                {"forward", gk::detail::matrix_to_json(crt.forward.projection())},
                {"backward", gk::detail::matrix_to_json(crt.backward.projection())}};
}

template <class K>
Json tower_payload(const std::string& poly_text, int depth, bool attested) {
    gk::Tower<K> tower = gk::build_tower(gk::poly_from_text<K>(poly_text), depth, attested);
    Json levels = Json::array();
    for (const auto& level : tower.levels)
        levels.push_back(Json{{"k", level.k}, {"dim", level.ring.degree()}});
    Json lifts = Json::array();
    for (const auto& w : tower.lift_witnesses)
        lifts.push_back(Json{{"from_level", w.from_level},
                             {"target_unit", gk::detail::vec_to_json(w.target_unit.coeffs())},
                             {"lifted_unit", gk::detail::vec_to_json(w.lifted_unit.coeffs())}});
    return Json{{"p", gk::poly_to_text(tower.p)},
                {"depth", tower.depth},
                {"levels", std::move(levels)},
                {"unit_lifts", std::move(lifts)}};
}

template <class K>
Json exp_payload(const gk::Element<K>& a, bool force_numeric, double precision) {
    if (!force_numeric && gk::nilpotency_index(a)) {
        gk::Element<K> e = gk::exp_exact(a);
        return Json{{"mode", "exact"}, {"coefficients", gk::detail::vec_to_json(e.coeffs())}};
    }
    gk::NumericElement<K> e = gk::exp_numeric(a, precision);
    Json coeffs = Json::array();
    for (const auto& c : e.coeffs) {
        if constexpr (gk::FieldTraits<K>::has_conjugation) {
            coeffs.push_back(Json::array({c.real(), c.imag()}));
        } else {
            coeffs.push_back(c);
        }
    }
    return Json{{"mode", "numeric"}, {"coefficients", std::move(coeffs)}, {"precision", e.precision}};
}

int run_verify(const std::string& suite, const IoOptions& io) {
    std::vector<gk::SuiteResult> results = gk::run_acceptance(suite);
    Json suites = Json::array();
    int failures = 0;
    for (const auto& s : results) {
        Json cases = Json::array();
        for (const auto& c : s.cases) {
            Json jc{{"name", c.name}, {"passed", c.passed}};
            if (!c.detail.empty()) jc["detail"] = c.detail;
            cases.push_back(std::move(jc));
        }
        bool ok = s.passed();
        failures += ok ? 0 : 1;
        std::cerr << (ok ? "[PASS] " : "[FAIL] ") << s.name << " — " << s.statement << "\n";
        for (const auto& c : s.cases)
            if (!c.passed) std::cerr << "        case " << c.name << ": " << c.detail << "\n";
        suites.push_back(Json{{"name", s.name},
                              {"statement", s.statement},
                              {"passed", ok},
                              {"cases", std::move(cases)}});
    }
    emit(io, Json{{"suites", std::move(suites)},
                  {"total", results.size()},
                  {"failures", failures}});
    return failures == 0 ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for finite-dimensional Hopf and group algebras"};
    app.require_subcommand(1);

    std::string field = "Q";
    std::string preset;
    IoOptions io;
    bool attested = false;
    bool numeric = false;
    double precision = 1e-12;
    int depth = 1;
    std::string poly_text, element_text, ring_text, suite = "all";
    std::vector<std::string> factor_args;

    auto add_io = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("--input", io.input_path, "path to a JSON payload");
            cmd->add_option("--json", io.inline_json, "inline JSON payload");
        }
        cmd->add_option("--output", io.output_path, "write the JSON result to this path");
    };
    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", field, "scalar field")->check(CLI::IsMember({"Q", "Qi"}));
    };

    CLI::App* cmd_group = app.add_subcommand("group-algebra", "build K[G] as a Hopf algebra");
    cmd_group->add_option("--preset", preset, "group preset, e.g. cyclic:3, symmetric:4, product(...)");
    add_field(cmd_group);
    add_io(cmd_group, true);

    CLI::App* cmd_grouplikes =
        app.add_subcommand("grouplikes", "solve for the grouplike elements of a Hopf algebra");
    add_field(cmd_grouplikes);
    add_io(cmd_grouplikes, true);

    CLI::App* cmd_primitives =
        app.add_subcommand("primitives", "solve for the primitive elements of a Hopf algebra");
    add_field(cmd_primitives);
    add_io(cmd_primitives, true);

    CLI::App* cmd_crt = app.add_subcommand("crt", "Chinese-remainder decomposition of K[X]/(f)");
    cmd_crt->add_option("--factor", factor_args, "monic factor 'c0,c1,...[^k]'")->required();
    cmd_crt->add_flag("--attested-irreducible", attested,
                      "caller attests irreducibility of degree >= 3 factors");
    add_field(cmd_crt);
    add_io(cmd_crt, false);

    CLI::App* cmd_tower = app.add_subcommand("tower", "truncated tower K[X]/(p^k), k = 1..depth");
    cmd_tower->add_option("--p", poly_text, "monic irreducible p as 'c0,c1,...'")->required();
    cmd_tower->add_option("--depth", depth, "truncation depth K_max")->required();
    cmd_tower->add_flag("--attested-irreducible", attested,
                        "caller attests irreducibility of degree >= 3 p");
    add_field(cmd_tower);
    add_io(cmd_tower, false);

    CLI::App* cmd_exp = app.add_subcommand("exp", "exponential of an element");
    cmd_exp->add_option("--ring", ring_text, "monic modulus of K[X]/(f) as 'c0,c1,...'");
    cmd_exp->add_option("--element", element_text, "element as poly text 'c0,c1,...'");
    cmd_exp->add_flag("--numeric", numeric, "force the numeric backend");
    cmd_exp->add_option("--precision", precision, "numeric precision target");
    add_field(cmd_exp);
    add_io(cmd_exp, true);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run acceptance suites");
    cmd_verify->add_option("suite", suite, "suite name or 'all'");
    add_io(cmd_verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputInvalid;
    }

    try {
        if (cmd_group->parsed()) {
            gk::GroupSpec g = preset.empty() ? gk::group_from_json(load_payload(io))
                                             : gk::preset_group(preset);
            if (field == "Q")
                emit(io, gk::hopf_to_json(gk::build_group_algebra<Rational>(g).hopf));
            else
                emit(io, gk::hopf_to_json(gk::build_group_algebra<GaussianRational>(g).hopf));
        } else if (cmd_grouplikes->parsed() || cmd_primitives->parsed()) {
            Json payload = load_payload(io);
            const bool want_grouplikes = cmd_grouplikes->parsed();
            if (gk::json_field_tag(payload) == "Q") {
                gk::HopfAlgebra<Rational> h = gk::hopf_from_json<Rational>(payload);
                gate_verify_hopf(h);
                emit(io, want_grouplikes ? grouplikes_payload(h) : primitives_payload(h));
            } else {
                gk::HopfAlgebra<GaussianRational> h = gk::hopf_from_json<GaussianRational>(payload);
                gate_verify_hopf(h);
                emit(io, want_grouplikes ? grouplikes_payload(h) : primitives_payload(h));
            }
        } else if (cmd_crt->parsed()) {
            emit(io, field == "Q" ? crt_payload<Rational>(factor_args, attested)
                                  : crt_payload<GaussianRational>(factor_args, attested));
        } else if (cmd_tower->parsed()) {
            emit(io, field == "Q" ? tower_payload<Rational>(poly_text, depth, attested)
                                  : tower_payload<GaussianRational>(poly_text, depth, attested));
        } else if (cmd_exp->parsed()) {
            if (!ring_text.empty() && !element_text.empty()) {
                if (field == "Q") {
                    gk::QuotientRing<Rational> ring =
                        gk::make_quotient_ring(gk::poly_from_text<Rational>(ring_text));
                    emit(io, exp_payload(ring.from_poly(gk::poly_from_text<Rational>(element_text)),
                                         numeric, precision));
                } else {
                    gk::QuotientRing<GaussianRational> ring =
                        gk::make_quotient_ring(gk::poly_from_text<GaussianRational>(ring_text));
                    emit(io,
                         exp_payload(ring.from_poly(gk::poly_from_text<GaussianRational>(element_text)),
                                     numeric, precision));
                }
            } else {
                Json payload = load_payload(io);
                if (gk::json_field_tag(payload.at("algebra")) == "Q") {
                    auto alg = gk::algebra_from_json<Rational>(payload.at("algebra"));
                    gk::Element<Rational> a(alg,
                                            gk::detail::vec_from_json<Rational>(payload.at("element")));
                    emit(io, exp_payload(a, numeric, precision));
                } else {
                    auto alg = gk::algebra_from_json<GaussianRational>(payload.at("algebra"));
                    gk::Element<GaussianRational> a(
                        alg, gk::detail::vec_from_json<GaussianRational>(payload.at("element")));
                    emit(io, exp_payload(a, numeric, precision));
                }
            }
        } else if (cmd_verify->parsed()) {
            return run_verify(suite, io);
        }
        return kExitOk;
    } catch (const gk::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputInvalid;
    } catch (const gk::HopfAxiomError& e) {
        std::cerr << "Hopf axiom violation: " << e.what() << "\n";
        return kExitHopfViolation;
    } catch (const gk::PreconditionError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const gk::InternalError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInternal;
    }
}
