#pragma once

// Exact root extraction over the working field: clear denominators, apply
// the rational root theorem to the resulting (Gaussian-)integer polynomial,
// then deflate for multiplicities.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "grouplike_kit/intfactor.hpp"
#include "grouplike_kit/poly.hpp"

namespace gk {

namespace detail {

inline Integer lcm_int(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

// Candidate roots of a polynomial with nonzero constant term, rationals.
inline std::vector<Rational> root_candidates(const Poly<Rational>& q) {
    Integer den_lcm(1);
    for (const auto& c : q.coeffs()) den_lcm = lcm_int(den_lcm, denominator(c));
    std::vector<Integer> zc(q.coeffs().size());
    Integer content(0);
    for (std::size_t i = 0; i < zc.size(); ++i) {
        zc[i] = numerator(q.coeffs()[i]) * (den_lcm / denominator(q.coeffs()[i]));
        content = gcd(content, zc[i]);
    }
    for (auto& c : zc) c /= content;
    const Integer a0 = abs(zc.front()), an = abs(zc.back());
    // Cauchy bound: every root satisfies |r| <= 1 + max|c_i| / |c_n|.
    Integer max_abs(0);
    for (const auto& c : zc) max_abs = std::max(max_abs, Integer(abs(c)));
    Integer bound_num = an + max_abs;  // |p/s| <= bound_num/an, so p <= bound_num (s >= 1 divides an)
    auto nums = divisors_up_to(factor_integer(a0), bound_num);
    auto dens = divisors_up_to(factor_integer(an), an);
    std::set<Rational> cand;
    for (const auto& p : nums)
        for (const auto& s : dens) {
            Rational r(p, s);
            if (an * numerator(r) > bound_num * denominator(r)) continue;
            cand.insert(r);
            cand.insert(-r);
        }
    return {cand.begin(), cand.end()};
}

// Candidate roots over the Gaussian rationals via divisors in Z[i].
inline std::vector<GaussianRational> root_candidates(const Poly<GaussianRational>& q) {
    Integer den_lcm(1);
    for (const auto& c : q.coeffs()) {
        den_lcm = lcm_int(den_lcm, denominator(c.re));
        den_lcm = lcm_int(den_lcm, denominator(c.im));
    }
    std::vector<GaussInt> zc(q.coeffs().size());
    for (std::size_t i = 0; i < zc.size(); ++i) {
        const auto& c = q.coeffs()[i];
        zc[i] = GaussInt{numerator(c.re) * (den_lcm / denominator(c.re)),
                         numerator(c.im) * (den_lcm / denominator(c.im))};
    }
    GaussInt content = zc.front();
    for (std::size_t i = 1; i < zc.size() && !(content == GaussInt(1)); ++i)
        content = gauss_gcd(content, zc[i]);
    if (!content.is_zero())
        for (auto& c : zc) c = gauss_div_exact(c, content);
    // Norm form of the Cauchy bound: N(r) <= 2 * (1 + max N(c_i)/N(c_n)).
    Rational max_norm(0);
    for (const auto& c : zc) max_norm = std::max(max_norm, Rational(c.norm()));
    Rational norm_bound = 2 * (1 + max_norm / Rational(zc.back().norm()));
    static const GaussInt units[4] = {GaussInt{Integer(1), Integer(0)}, GaussInt{Integer(-1), Integer(0)},
                                      GaussInt{Integer(0), Integer(1)}, GaussInt{Integer(0), Integer(-1)}};
    auto nums = gauss_divisors(zc.front());
    auto dens = gauss_divisors(zc.back());
    std::set<GaussianRational> cand;
    for (const auto& p : nums)
        for (const auto& s : dens) {
            if (Rational(p.norm()) > norm_bound * Rational(s.norm())) continue;
            for (const auto& u : units) {
                GaussInt up = u * p;
                GaussianRational num{Rational(up.a), Rational(up.b)};
                GaussianRational den{Rational(s.a), Rational(s.b)};
                cand.insert(num / den);
            }
        }
    return {cand.begin(), cand.end()};
}

// Exact division by (X - r); the remainder must vanish.
template <class K>
Poly<K> deflate(const Poly<K>& f, const K& r) {
    std::vector<K> q(f.coeffs().size() - 1);
    K carry(0);
    for (std::size_t i = f.coeffs().size(); i-- > 1;) {
        carry = f.coeffs()[i] + r * carry;
        q[i - 1] = carry;
    }
    if (f.coeffs()[0] + r * carry != K(0)) throw InternalError("deflation by a non-root");
    return Poly<K>(std::move(q));
}

}  // namespace detail

/// All roots of p in the working field, with multiplicities, ascending in
/// the field's deterministic order.  p must be nonzero.
template <class K>
std::vector<std::pair<K, int>> rational_roots(const Poly<K>& p) {
    if (p.is_zero()) throw PreconditionError("rational_roots of the zero polynomial");
    std::vector<std::pair<K, int>> roots;
    std::size_t shift = 0;
    while (shift < p.coeffs().size() && is_zero(p.coeffs()[shift])) ++shift;
    Poly<K> q(std::vector<K>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end()));
    if (shift > 0) roots.emplace_back(K(0), static_cast<int>(shift));
    if (q.degree() >= 1) {
        for (const K& r : detail::root_candidates(q)) {
            int mult = 0;
            while (!q.is_zero() && q.degree() >= 1 && q.eval(r) == K(0)) {
                q = detail::deflate(q, r);
                ++mult;
            }
            if (mult > 0) roots.emplace_back(r, mult);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return FieldTraits<K>::less(a.first, b.first); });
    return roots;
}

}  // namespace gk
