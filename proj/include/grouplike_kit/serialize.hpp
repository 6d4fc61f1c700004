#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grouplike_kit/group_algebra.hpp"
#include "grouplike_kit/hopf.hpp"
#include "grouplike_kit/quotient_ring.hpp"

namespace gk {

using Json = nlohmann::json;

// Scalars serialize as exact decimal strings: Q as [num, den], Qi as
// [re_num, re_den, im_num, im_den].  Elements/vectors use the canonical
// one-string form ("p/q", "a+b/ci") instead.

namespace detail {

template <class K>
void append_scalar_parts(Json& arr, const K& v);

template <>
inline void append_scalar_parts<Rational>(Json& arr, const Rational& v) {
    arr.push_back(numerator(v).str());
    arr.push_back(denominator(v).str());
}

template <>
inline void append_scalar_parts<GaussianRational>(Json& arr, const GaussianRational& v) {
    arr.push_back(numerator(v.re).str());
    arr.push_back(denominator(v.re).str());
    arr.push_back(numerator(v.im).str());
    arr.push_back(denominator(v.im).str());
}

template <class K>
constexpr std::size_t scalar_part_count() {
    return FieldTraits<K>::has_conjugation ? 4 : 2;
}

template <class K>
K scalar_from_parts(const Json& arr, std::size_t offset);

template <>
inline Rational scalar_from_parts<Rational>(const Json& arr, std::size_t offset) {
    return parse_rational(std::string(arr.at(offset).get<std::string>()) + "/" +
                          arr.at(offset + 1).get<std::string>());
}

template <>
inline GaussianRational scalar_from_parts<GaussianRational>(const Json& arr, std::size_t offset) {
    return {scalar_from_parts<Rational>(arr, offset), scalar_from_parts<Rational>(arr, offset + 2)};
}

template <class K>
Json vec_to_json(const Vec<K>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(scalar_str(x));
    return arr;
}

template <class K>
Vec<K> vec_from_json(const Json& arr) {
    Vec<K> v;
    for (const auto& s : arr) v.push_back(FieldTraits<K>::parse(s.get<std::string>()));
    return v;
}

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
Matrix<K> matrix_from_json(const Json& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.at(0).size()) : 0;
    Matrix<K> m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows.at(i).size()) != c) throw InputError("ragged matrix in JSON");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = FieldTraits<K>::parse(rows.at(i).at(j).get<std::string>());
    }
    return m;
}

}  // namespace detail

/// {dim, field, structure: [[i,j,k,num,den(,im num,im den)]...], unit, labels?}
template <class K>
Json algebra_to_json(const AlgebraPtr<K>& alg) {
    Json structure = Json::array();
    for (int i = 0; i < alg->dim(); ++i)
        for (int j = 0; j < alg->dim(); ++j)
            for (const auto& [k, c] : alg->structure().product(i, j)) {
                Json t = Json::array({i, j, k});
                detail::append_scalar_parts<K>(t, c);
                structure.push_back(std::move(t));
            }
    Json out{{"dim", alg->dim()},
             {"field", std::string(FieldTraits<K>::tag)},
             {"structure", std::move(structure)},
             {"unit", detail::vec_to_json(alg->unit())}};
    if (!alg->labels().empty()) out["labels"] = alg->labels();
    return out;
}

inline std::string json_field_tag(const Json& j) {
    if (!j.contains("field")) throw InputError("missing field tag in JSON input");
    return j.at("field").get<std::string>();
}

template <class K>
AlgebraPtr<K> algebra_from_json(const Json& j) {
    try {
        if (json_field_tag(j) != FieldTraits<K>::tag)
            throw InputError("field tag does not match the requested scalar field");
        const int dim = j.at("dim").get<int>();
        StructureTensor<K> st(dim);
        constexpr std::size_t parts = detail::scalar_part_count<K>();
        for (const auto& t : j.at("structure")) {
            if (t.size() != 3 + parts) throw InputError("structure triplet has the wrong arity");
            st.add(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(),
                   detail::scalar_from_parts<K>(t, 3));
        }
        Vec<K> unit = detail::vec_from_json<K>(j.at("unit"));
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return FDAlgebra<K>::make(std::move(st), std::move(unit), std::move(labels));
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed algebra JSON: ") + e.what());
    }
}

/// Algebra fields plus {comultiplication: [[i,j,k,...]...], counit, antipode}.
template <class K>
Json hopf_to_json(const HopfAlgebra<K>& h) {
    Json out = algebra_to_json(h.algebra);
    Json comul = Json::array();
    for (int i = 0; i < h.dim(); ++i)
        for (const auto& [jj, kk, c] : h.coalgebra.delta[i]) {
            Json t = Json::array({i, jj, kk});
            detail::append_scalar_parts<K>(t, c);
            comul.push_back(std::move(t));
        }
    out["comultiplication"] = std::move(comul);
    out["counit"] = detail::vec_to_json(h.coalgebra.counit);
    out["antipode"] = detail::matrix_to_json(h.antipode);
    return out;
}

template <class K>
HopfAlgebra<K> hopf_from_json(const Json& j) {
    AlgebraPtr<K> alg = algebra_from_json<K>(j);
    try {
        const int dim = alg->dim();
        std::vector<std::vector<std::tuple<int, int, K>>> delta(dim);
        constexpr std::size_t parts = detail::scalar_part_count<K>();
        for (const auto& t : j.at("comultiplication")) {
            if (t.size() != 3 + parts) throw InputError("comultiplication triplet has the wrong arity");
            const int i = t.at(0).get<int>();
            if (i < 0 || i >= dim) throw InputError("comultiplication source index out of range");
            delta[i].emplace_back(t.at(1).get<int>(), t.at(2).get<int>(),
                                  detail::scalar_from_parts<K>(t, 3));
        }
        Coalgebra<K> co =
            make_coalgebra(dim, std::move(delta), detail::vec_from_json<K>(j.at("counit")));
        Matrix<K> antipode = detail::matrix_from_json<K>(j.at("antipode"));
        return make_hopf(std::move(alg), std::move(co), std::move(antipode));
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed Hopf JSON: ") + e.what());
    }
}

inline Json group_to_json(const GroupSpec& g) {
    return Json{{"name", g.name}, {"order", g.order}, {"identity", g.identity}, {"cayley", g.cayley}};
}

inline GroupSpec group_from_json(const Json& j) {
    try {
        return make_group(j.value("name", std::string("custom")), j.at("order").get<int>(),
                          j.at("identity").get<int>(), j.at("cayley").get<std::vector<int>>());
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed group JSON: ") + e.what());
    }
}

/// {group: preset name or group object, weights: scalar strings}
template <class K>
MeasureVector<K> measure_from_json(const Json& j) {
    try {
        GroupSpec g = j.at("group").is_string() ? preset_group(j.at("group").get<std::string>())
                                                : group_from_json(j.at("group"));
        return make_measure(g, detail::vec_from_json<K>(j.at("weights")));
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed measure JSON: ") + e.what());
    }
}

template <class K>
Json measure_to_json(const MeasureVector<K>& mu) {
    return Json{{"group", group_to_json(mu.group)}, {"weights", detail::vec_to_json(mu.weights)}};
}

/// Tower descriptor {p: ascending coefficient strings, k_max}.
template <class K>
std::pair<Poly<K>, int> tower_descriptor_from_json(const Json& j) {
    try {
        return {Poly<K>(detail::vec_from_json<K>(j.at("p"))), j.at("k_max").get<int>()};
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed tower descriptor: ") + e.what());
    }
}

/// Canonical text: nlohmann sorts object keys; exact scalars are strings,
/// so identical inputs produce byte-identical output.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace gk
