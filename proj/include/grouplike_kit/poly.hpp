#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grouplike_kit/error.hpp"
#include "grouplike_kit/scalar.hpp"

namespace gk {

/// Univariate polynomial with ascending coefficient list and no trailing
/// zeros.  The zero polynomial is the empty list; degree() is then -1.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Poly constant(K c) { return Poly(std::vector<K>{std::move(c)}); }
    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<K>& coeffs() const { return coeffs_; }

    const K& operator[](std::size_t i) const { return coeffs_[i]; }
    K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }

    K leading() const {
        if (is_zero()) throw PreconditionError("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back() == K(1); }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<K> c(std::max(f.coeffs_.size(), g.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c[i] = c[i] + f.coeffs_[i];
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] = c[i] + g.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        std::vector<K> c(std::max(f.coeffs_.size(), g.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c[i] = c[i] + f.coeffs_[i];
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] = c[i] - g.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& f) {
        std::vector<K> c(f.coeffs_);
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::vector<K> c(f.coeffs_.size() + g.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (gk::is_zero(f.coeffs_[i])) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + f.coeffs_[i] * g.coeffs_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const K& s, const Poly& f) {
        std::vector<K> c(f.coeffs_);
        for (auto& v : c) v = s * v;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& f, const Poly& g) { return f.coeffs_ == g.coeffs_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    K eval(const K& x) const {  // Horner
        K acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<K> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = K(static_cast<int>(i)) * coeffs_[i];
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!coeffs_.empty() && gk::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

/// Exact Euclidean division: f = q*g + r with deg r < deg g.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<K> rem(f.coeffs());
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly<K>(), f};
    std::vector<K> quo(f.degree() - dg + 1, K(0));
    K lead_inv = K(1) / g.leading();
    for (int i = f.degree(); i >= dg; --i) {
        K c = rem[i] * lead_inv;
        if (is_zero(c)) continue;
        quo[i - dg] = c;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] = rem[i - dg + j] - c * g.coeffs()[j];
    }
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& f, const Poly<K>& g) {
    return poly_divmod(f, g).second;
}

template <class K>
Poly<K> poly_div_exact(const Poly<K>& f, const Poly<K>& g) {
    auto [q, r] = poly_divmod(f, g);
    if (!r.is_zero()) throw InternalError("expected exact polynomial division");
    return q;
}

template <class K>
Poly<K> make_monic(const Poly<K>& f) {
    if (f.is_zero()) return f;
    return (K(1) / f.leading()) * f;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g and g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0 = Poly<K>::constant(K(1)), u1;
    Poly<K> v0, v1 = Poly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Poly<K> v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K inv = K(1) / r0.leading();
    return {inv * r0, inv * u0, inv * v0};
}

template <class K>
Poly<K> poly_pow(const Poly<K>& f, int e) {
    Poly<K> acc = Poly<K>::constant(K(1));
    for (int i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

/// Text form "c0,c1,...,cn" with exact scalar entries.
template <class K>
std::string poly_to_text(const Poly<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += scalar_str(f.coeffs()[i]);
    }
    return out;
}

template <class K>
Poly<K> poly_from_text(std::string_view text) {
    std::vector<K> coeffs;
    std::string buf(text);
    std::stringstream ss(buf);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // tolerate surrounding spaces
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InputError("empty coefficient in polynomial text");
        coeffs.push_back(FieldTraits<K>::parse(item.substr(b, e - b + 1)));
    }
    if (coeffs.empty()) throw InputError("empty polynomial text");
    return Poly<K>(std::move(coeffs));
}

}  // namespace gk
