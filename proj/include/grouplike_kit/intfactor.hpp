#pragma once

// Exact integer and Gaussian-integer factorization utilities backing the
// rational root theorem.  Desk-scale inputs only; a hard candidate cap turns
// pathological divisor explosions into an internal error instead of a hang.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "grouplike_kit/error.hpp"
#include "grouplike_kit/scalar.hpp"

namespace gk::detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Integer round_div(const Integer& a, const Integer& b) {
    // nearest integer to a/b, b != 0; ties toward +infinity
    if (b < 0) return round_div(-a, -b);
    return floor_div(2 * a + b, 2 * b);
}

inline bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, int s) {
    Integer x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Deterministic below 3.3e24; fixed-base beyond that, far past desk scale.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (miller_rabin_witness(n, Integer(a), d, s)) return false;
    return true;
}

inline Integer pollard_rho(const Integer& n) {
    // Floyd cycle finding on x -> x^2 + c mod n; n is odd and composite.
    for (Integer c(1);; ++c) {
        Integer x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            if (x == y) break;  // closed cycle without a factor; next c
            d = gcd(x > y ? x - y : y - x, n);
        }
        if (d != 1 && d != n) return d;
    }
}

/// Prime factorization of n >= 1, primes ascending.
inline std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
    if (n < 1) throw PreconditionError("factor_integer expects a positive integer");
    std::map<Integer, int> acc;
    for (Integer p(2); p <= 1009 && p * p <= n; p = (p == 2 ? Integer(3) : p + 2)) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    // Split the remaining cofactor with Miller-Rabin + Pollard rho.
    std::vector<Integer> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (is_prime(m)) {
            ++acc[m];
            continue;
        }
        Integer d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return {acc.begin(), acc.end()};
}

/// All positive divisors <= bound (no bound when bound <= 0), ascending.
/// Throws InternalError if more than `cap` divisors would be produced.
inline std::vector<Integer> divisors_up_to(const std::vector<std::pair<Integer, int>>& factors,
                                           const Integer& bound, std::size_t cap = 1u << 20) {
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = out.size();
        Integer pk(1);
        for (int i = 0; i < e; ++i) {
            pk *= p;
            if (bound > 0 && pk > bound) break;
            for (std::size_t j = 0; j < base; ++j) {
                Integer d = out[j] * pk;
                if (bound > 0 && d > bound) continue;
                out.push_back(d);
                if (out.size() > cap)
                    throw InternalError("divisor enumeration exceeded the candidate cap");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Gaussian integer a + b*i.
struct GaussInt {
    Integer a, b;

    GaussInt() : a(0), b(0) {}
    GaussInt(Integer re, Integer im) : a(std::move(re)), b(std::move(im)) {}
    explicit GaussInt(int re) : a(re), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    Integer norm() const { return a * a + b * b; }
    GaussInt conj() const { return {a, -b}; }

    friend GaussInt operator+(const GaussInt& x, const GaussInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend GaussInt operator-(const GaussInt& x, const GaussInt& y) { return {x.a - y.a, x.b - y.b}; }
    friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const GaussInt& x, const GaussInt& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const GaussInt& x, const GaussInt& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline GaussInt gauss_round_div(const GaussInt& z, const GaussInt& w) {
    Integer n = w.norm();
    GaussInt zw = z * w.conj();
    return {round_div(zw.a, n), round_div(zw.b, n)};
}

inline bool gauss_divides(const GaussInt& w, const GaussInt& z) {
    Integer n = w.norm();
    GaussInt zw = z * w.conj();
    return zw.a % n == 0 && zw.b % n == 0;
}

inline GaussInt gauss_div_exact(const GaussInt& z, const GaussInt& w) {
    Integer n = w.norm();
    GaussInt zw = z * w.conj();
    if (zw.a % n != 0 || zw.b % n != 0) throw InternalError("inexact Gaussian division");
    return {zw.a / n, zw.b / n};
}

inline GaussInt gauss_gcd(GaussInt x, GaussInt y) {
    while (!y.is_zero()) {
        GaussInt q = gauss_round_div(x, y);
        GaussInt r = x - q * y;
        x = y;
        y = r;
    }
    return x;
}

/// Unique associate with a > 0, b >= 0 (nonzero input).
inline GaussInt gauss_canonical(GaussInt z) {
    if (z.is_zero()) return z;
    for (int rot = 0; rot < 3 && !(z.a > 0 && z.b >= 0); ++rot) z = z * GaussInt{Integer(0), Integer(1)};
    if (!(z.a > 0 && z.b >= 0)) throw InternalError("Gaussian canonical associate not found");
    return z;
}

/// Gaussian prime factorization up to a unit, canonical-associate primes.
inline std::vector<std::pair<GaussInt, int>> factor_gauss(GaussInt z) {
    if (z.is_zero()) throw PreconditionError("factor_gauss of zero");
    std::map<GaussInt, int> acc;
    auto divide_out = [&](const GaussInt& prime) {
        GaussInt p = gauss_canonical(prime);
        while (gauss_divides(p, z)) {
            z = gauss_div_exact(z, p);
            ++acc[p];
        }
    };
    for (const auto& [p, e] : factor_integer(z.norm())) {
        (void)e;
        if (p == 2) {
            divide_out(GaussInt{Integer(1), Integer(1)});
        } else if (p % 4 == 3) {
            divide_out(GaussInt{p, Integer(0)});
        } else {
            // p = 1 mod 4 splits; find sqrt(-1) mod p from a non-residue.
            Integer x(0);
            for (Integer a(2);; ++a) {
                if (powm(a, (p - 1) / 2, p) == p - 1) {
                    x = powm(a, (p - 1) / 4, p);
                    break;
                }
            }
            GaussInt pi = gauss_gcd(GaussInt{p, Integer(0)}, GaussInt{x, Integer(1)});
            divide_out(pi);
            divide_out(pi.conj());
        }
    }
    return {acc.begin(), acc.end()};
}

/// All divisors of z up to associates (canonical representatives).
inline std::vector<GaussInt> gauss_divisors(const GaussInt& z, std::size_t cap = 1u << 18) {
    std::vector<GaussInt> out{GaussInt(1)};
    for (const auto& [p, e] : factor_gauss(z)) {
        std::size_t base = out.size();
        GaussInt pk(1);
        for (int i = 0; i < e; ++i) {
            pk = pk * p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(gauss_canonical(out[j] * pk));
                if (out.size() > cap)
                    throw InternalError("Gaussian divisor enumeration exceeded the candidate cap");
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace gk::detail
