#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "grouplike_kit/error.hpp"

namespace gk {

/// A finite group as a Cayley table over element indices 0..n-1.
/// Associativity, the identity law and the inverse table are verified
/// eagerly at construction (O(n^3), fine at the order cap of 120).
struct GroupSpec {
    std::string name;
    int order = 0;
    int identity = 0;
    std::vector<int> cayley;  // row-major: cayley[g*order + h] = g*h
    std::vector<int> inverse;

    int op(int g, int h) const { return cayley[static_cast<std::size_t>(g) * order + h]; }
    int inv(int g) const { return inverse[static_cast<std::size_t>(g)]; }

    bool is_abelian() const {
        for (int g = 0; g < order; ++g)
            for (int h = g + 1; h < order; ++h)
                if (op(g, h) != op(h, g)) return false;
        return true;
    }
};

inline constexpr int kGroupOrderCap = 120;

inline GroupSpec make_group(std::string name, int order, int identity, std::vector<int> cayley) {
    if (order < 1) throw InputError("group order must be >= 1");
    if (order > kGroupOrderCap)
        throw InputError("group order " + std::to_string(order) + " exceeds the cap of " +
                         std::to_string(kGroupOrderCap));
    if (identity < 0 || identity >= order) throw InputError("identity index out of range");
    if (static_cast<int>(cayley.size()) != order * order)
        throw InputError("Cayley table must have order^2 entries");
    for (int v : cayley)
        if (v < 0 || v >= order) throw InputError("Cayley table entry out of range");

    GroupSpec g{std::move(name), order, identity, std::move(cayley), {}};
    for (int x = 0; x < order; ++x)
        if (g.op(g.identity, x) != x || g.op(x, g.identity) != x)
            throw InputError("identity law fails at element " + std::to_string(x));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw InputError("associativity fails at triple (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    g.inverse.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) {
                g.inverse[a] = b;
                break;
            }
        if (g.inverse[a] < 0) throw InputError("element " + std::to_string(a) + " has no inverse");
    }
    return g;
}

inline GroupSpec product_group(const GroupSpec& a, const GroupSpec& b) {
    const int n = a.order * b.order;
    if (n > kGroupOrderCap) throw InputError("product group exceeds the order cap");
    std::vector<int> cayley(static_cast<std::size_t>(n) * n);
    auto idx = [&](int g, int h) { return g * b.order + h; };
    for (int g1 = 0; g1 < a.order; ++g1)
        for (int h1 = 0; h1 < b.order; ++h1)
            for (int g2 = 0; g2 < a.order; ++g2)
                for (int h2 = 0; h2 < b.order; ++h2)
                    cayley[static_cast<std::size_t>(idx(g1, h1)) * n + idx(g2, h2)] =
                        idx(a.op(g1, g2), b.op(h1, h2));
    return make_group("product(" + a.name + "," + b.name + ")", n, idx(a.identity, b.identity),
                      std::move(cayley));
}

namespace detail {

inline GroupSpec cyclic_group(int n) {
    if (n < 1) throw InputError("cyclic group order must be >= 1");
    std::vector<int> cayley(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cayley[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return make_group("cyclic:" + std::to_string(n), n, 0, std::move(cayley));
}

inline GroupSpec dihedral_group(int n) {
    if (n < 1) throw InputError("dihedral parameter must be >= 1");
    const int order = 2 * n;
    // index a + n*b for r^a s^b; s r^c = r^{-c} s
    auto idx = [&](int a, int b) { return a + n * b; };
    std::vector<int> cayley(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    int rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
                    cayley[static_cast<std::size_t>(idx(a, b)) * order + idx(c, d)] = idx(rot, b ^ d);
                }
    return make_group("dihedral:" + std::to_string(n), order, 0, std::move(cayley));
}

inline std::vector<std::vector<int>> permutations_lex(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

inline bool perm_is_even(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

inline GroupSpec permutation_group(int n, bool even_only) {
    if (n < 1 || n > 5)
        throw InputError("permutation-group presets are capped at degree 5");
    std::vector<std::vector<int>> elems;
    for (auto& p : permutations_lex(n))
        if (!even_only || perm_is_even(p)) elems.push_back(std::move(p));
    const int order = static_cast<int>(elems.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < order; ++i) index[elems[i]] = i;
    std::vector<int> cayley(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            std::vector<int> comp(n);  // (p_i p_j)(x) = p_i(p_j(x))
            for (int x = 0; x < n; ++x) comp[x] = elems[i][elems[j][x]];
            cayley[static_cast<std::size_t>(i) * order + j] = index.at(comp);
        }
    std::string name = (even_only ? "alternating:" : "symmetric:") + std::to_string(n);
    return make_group(std::move(name), order, 0, std::move(cayley));
}

inline GroupSpec quaternion_group() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k; (s, axis) with axis 0 = scalar.
    auto enc = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    auto mul = [&](int x, int y) {
        int sx = x % 2 ? -1 : 1, ax = x / 2;
        int sy = y % 2 ? -1 : 1, ay = y / 2;
        static const int axis_table[4][4] = {  // result axis for i,j,k products
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign_table[4][4] = {  // extra sign from the quaternion law
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        // sign_table[a][b]: i*i=j*j=k*k=-1, i*j=k, j*k=i, k*i=j, anticommute
        return enc(sx * sy * sign_table[ax][ay], axis_table[ax][ay]);
    };
    std::vector<int> cayley(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) cayley[static_cast<std::size_t>(x) * 8 + y] = mul(x, y);
    return make_group("quaternion8", 8, 0, std::move(cayley));
}

}  // namespace detail

/// Compiled-in presets: cyclic:n, dihedral:n, symmetric:n (n<=5),
/// alternating:n (n<=5), quaternion8, klein4, product(a,b).  Order <= 120.
inline GroupSpec preset_group(const std::string& spec) {
    auto parse_param = [&](const std::string& prefix) -> int {
        std::string num = spec.substr(prefix.size());
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad preset parameter in '" + spec + "'");
        return std::stoi(num);
    };
    if (spec.rfind("cyclic:", 0) == 0) return detail::cyclic_group(parse_param("cyclic:"));
    if (spec.rfind("dihedral:", 0) == 0) return detail::dihedral_group(parse_param("dihedral:"));
    if (spec.rfind("symmetric:", 0) == 0) return detail::permutation_group(parse_param("symmetric:"), false);
    if (spec.rfind("alternating:", 0) == 0)
        return detail::permutation_group(parse_param("alternating:"), true);
    if (spec == "quaternion8") return detail::quaternion_group();
    if (spec == "klein4") {
        GroupSpec g = product_group(detail::cyclic_group(2), detail::cyclic_group(2));
        g.name = "klein4";
        return g;
    }
    if (spec.rfind("product(", 0) == 0 && spec.back() == ')') {
        std::string inner = spec.substr(8, spec.size() - 9);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0)
                return product_group(preset_group(inner.substr(0, i)), preset_group(inner.substr(i + 1)));
        }
        throw InputError("product preset needs two comma-separated components");
    }
    throw InputError("unknown group preset '" + spec + "'");
}

}  // namespace gk
