#pragma once

// Shared deterministic generators for the test suites.

#include <random>

#include "grouplike_kit/fdalgebra.hpp"

namespace gktest {

inline gk::Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return gk::Rational(num(rng), den(rng));
}

template <class K>
K random_scalar(std::mt19937& rng) {
    if constexpr (gk::FieldTraits<K>::has_conjugation) {
        return K{random_rational(rng), random_rational(rng)};
    } else {
        return random_rational(rng);
    }
}

template <class K>
gk::Matrix<K> random_matrix(int rows, int cols, std::mt19937& rng) {
    gk::Matrix<K> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar<K>(rng);
    return m;
}

template <class K>
gk::Element<K> random_element(const gk::AlgebraPtr<K>& alg, std::mt19937& rng) {
    gk::Vec<K> c(alg->dim());
    for (auto& v : c) v = random_scalar<K>(rng);
    return gk::Element<K>(alg, std::move(c));
}

}  // namespace gktest
