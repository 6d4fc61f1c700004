#pragma once

#include <string>
#include <vector>

#include "grouplike_kit/hopf.hpp"

namespace gk {

/// Full matrix algebra on the E_ij basis, index i*n + j.
template <class K>
AlgebraPtr<K> matrix_algebra(int n) {
    StructureTensor<K> st(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) st.add(i * n + j, k * n + l, i * n + l, K(1));
    Vec<K> unit(static_cast<std::size_t>(n) * n, K(0));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) unit[static_cast<std::size_t>(i) * n + j] = K(1);
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return FDAlgebra<K>::make(std::move(st), std::move(unit), std::move(labels));
}

/// Upper-triangular n x n matrices on the E_ij (i <= j) basis.
template <class K>
AlgebraPtr<K> upper_triangular_algebra(int n) {
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) basis.emplace_back(i, j);
    const int d = static_cast<int>(basis.size());
    auto index_of = [&](int i, int j) {
        for (int t = 0; t < d; ++t)
            if (basis[t] == std::pair(i, j)) return t;
        return -1;
    };
    StructureTensor<K> st(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            auto [i, j] = basis[a];
            auto [k, l] = basis[b];
            if (j == k) st.add(a, b, index_of(i, l), K(1));
        }
    Vec<K> unit(static_cast<std::size_t>(d), K(0));
    std::vector<std::string> labels;
    for (int t = 0; t < d; ++t) {
        if (basis[t].first == basis[t].second) unit[t] = K(1);
        labels.push_back("E" + std::to_string(basis[t].first + 1) + std::to_string(basis[t].second + 1));
    }
    return FDAlgebra<K>::make(std::move(st), std::move(unit), std::move(labels));
}

/// Square-zero extension K (+) V on basis {1, v_1, ..., v_d}:
/// (r1, v1)(r2, v2) = (r1 r2, r1 v2 + r2 v1), so v_i v_j = 0.
template <class K>
AlgebraPtr<K> square_zero_extension(int d) {
    StructureTensor<K> st(d + 1);
    st.add(0, 0, 0, K(1));
    for (int i = 1; i <= d; ++i) {
        st.add(0, i, i, K(1));
        st.add(i, 0, i, K(1));
    }
    Vec<K> unit = unit_vec<K>(d + 1, 0);
    std::vector<std::string> labels{"r"};
    for (int i = 1; i <= d; ++i) labels.push_back("v" + std::to_string(i));
    return FDAlgebra<K>::make(std::move(st), std::move(unit), std::move(labels));
}

/// The two-dimensional structure on {1, x} with x^2 = 0, Delta(x) =
/// x(x)1 + 1(x)x, kappa(x) = 0, sigma(x) = -x.  Over a characteristic-zero
/// field Delta cannot be multiplicative on the nilpotent: Delta(x)^2 =
/// 2 x(x)x while Delta(x^2) = 0, and verify_hopf reports exactly that
/// defect.  Every coalgebra, counit and antipode law holds, which is what
/// the primitive-element machinery needs.
template <class K>
HopfAlgebra<K> dual_numbers_hopf() {
    StructureTensor<K> st(2);
    st.add(0, 0, 0, K(1));
    st.add(0, 1, 1, K(1));
    st.add(1, 0, 1, K(1));
    AlgebraPtr<K> alg =
        FDAlgebra<K>::make(std::move(st), unit_vec<K>(2, 0), std::vector<std::string>{"1", "x"});
    std::vector<std::vector<std::tuple<int, int, K>>> delta(2);
    delta[0].emplace_back(0, 0, K(1));
    delta[1].emplace_back(1, 0, K(1));
    delta[1].emplace_back(0, 1, K(1));
    Coalgebra<K> co = make_coalgebra(2, std::move(delta), Vec<K>{K(1), K(0)});
    Matrix<K> sigma(2, 2);
    sigma.at(0, 0) = K(1);
    sigma.at(1, 1) = K(-1);
    return make_hopf(std::move(alg), std::move(co), std::move(sigma));
}

}  // namespace gk
