#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "grouplike_kit/error.hpp"

namespace gk {

// Expression templates are switched off so that arithmetic results are
// values usable directly in generic code.
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Exact rational p/q, always in lowest terms with q > 0.  All arithmetic is
/// exact; no rounding ever occurs in this type.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Exact Gaussian rational a + b*i with rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(int n) : re(n) {}                  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// Field norm a^2 + b^2 (a nonnegative rational, zero iff *this is zero).
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        Rational n = y.norm();
        if (n == 0) throw PreconditionError("division by zero Gaussian rational");
        GaussianRational z = x * y.conj();
        return {z.re / n, z.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
    GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
    GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
    GaussianRational& operator/=(const GaussianRational& y) { return *this = *this / y; }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }

    // Lexicographic order on (re, im).  Not a field order; used only for
    // deterministic sorting and as a container key.
    friend bool operator<(const GaussianRational& x, const GaussianRational& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    }
};

namespace detail {

inline Rational parse_rational(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) throw InputError("empty rational literal");
    std::string text(s);
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text), Integer(1));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw InputError("rational with zero denominator: " + text);
        return Rational(num, den);  // canonicalizes sign and gcd
    } catch (const std::runtime_error&) {
        throw InputError("unparsable rational literal: " + text);
    }
}

inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace detail

/// Per-field behaviour shared by every module templated on the scalar type.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr std::string_view tag = "Q";
    static constexpr bool has_conjugation = false;
    using NumericType = double;

    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational conjugate(const Rational& x) { return x; }
    static Rational from_rational(Rational r) { return r; }
    static const Rational& real_part(const Rational& x) { return x; }
    static Rational imag_part(const Rational&) { return Rational(0); }
    static NumericType to_numeric(const Rational& x) { return x.convert_to<double>(); }
    static bool less(const Rational& a, const Rational& b) { return a < b; }

    static std::string str(const Rational& x) { return detail::rational_str(x); }
    static Rational parse(std::string_view s) { return detail::parse_rational(s); }
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr std::string_view tag = "Qi";
    static constexpr bool has_conjugation = true;
    using NumericType = std::complex<double>;

    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static GaussianRational conjugate(const GaussianRational& x) { return x.conj(); }
    static GaussianRational from_rational(Rational r) { return GaussianRational(std::move(r)); }
    static const Rational& real_part(const GaussianRational& x) { return x.re; }
    static Rational imag_part(const GaussianRational& x) { return x.im; }
    static NumericType to_numeric(const GaussianRational& x) {
        return {x.re.convert_to<double>(), x.im.convert_to<double>()};
    }
    static bool less(const GaussianRational& a, const GaussianRational& b) { return a < b; }

    // Canonical text form: "a", "bi", or "a+bi"/"a-bi" with rational a, b.
    static std::string str(const GaussianRational& x) {
        if (x.im == 0) return detail::rational_str(x.re);
        std::string imag = detail::rational_str(x.im) + "i";
        if (x.re == 0) return imag;
        if (x.im > 0) return detail::rational_str(x.re) + "+" + imag;
        return detail::rational_str(x.re) + imag;  // sign carried by im
    }

    static GaussianRational parse(std::string_view s) {
        if (s.empty()) throw InputError("empty Gaussian rational literal");
        if (s.back() != 'i') return GaussianRational(detail::parse_rational(s));
        std::string_view body = s.substr(0, s.size() - 1);
        // Find the split between real and imaginary parts: the last sign that
        // is neither leading nor part of "p/q" digits' exponent (no exponents
        // occur in exact literals, so any interior sign splits).
        for (std::size_t pos = body.size(); pos-- > 1;) {
            if (body[pos] == '+' || body[pos] == '-') {
                Rational re = detail::parse_rational(body.substr(0, pos));
                std::string_view imag = body.substr(pos);
                if (imag == "+") return {re, Rational(1)};
                if (imag == "-") return {re, Rational(-1)};
                return {re, detail::parse_rational(imag)};
            }
        }
        if (body.empty()) return {Rational(0), Rational(1)};   // "i"
        if (body == "-") return {Rational(0), Rational(-1)};   // "-i"
        if (body == "+") return {Rational(0), Rational(1)};
        return {Rational(0), detail::parse_rational(body)};
    }
};

template <class K>
bool is_zero(const K& x) {
    return FieldTraits<K>::is_zero(x);
}

template <class K>
std::string scalar_str(const K& x) {
    return FieldTraits<K>::str(x);
}

}  // namespace gk
