#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the group element tables.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

#include "regrep/groups.hpp"
#include "regrep/kernels.hpp"
#include "regrep/polynomial.hpp"

namespace oracle {

inline long ramanujan(long q, long n) {
    double s = 0;
    for (long a = 1; a <= q; ++a)
        if (std::gcd(a, q) == 1) s += std::cos(2 * std::numbers::pi * double(a) * double(n) / double(q));
    return std::lround(s);
}

inline long phi(long n) {
    long c = 0;
    for (long a = 1; a <= n; ++a) c += std::gcd(a, n) == 1;
    return c;
}

// Multisets of size m drawn from Z_n whose sum is i mod n.
inline long weighted_multisets(int n, int m, int i) {
    long count = 0;
    std::function<void(int, int, int)> rec = [&](int from, int left, int sum) {
        if (left == 0) {
            count += sum == ((i % n) + n) % n;
            return;
        }
        for (int v = from; v < n; ++v) rec(v, left - 1, (sum + v) % n);
    };
    rec(0, m, 0);
    return count;
}

// m-subsets of Z_n with sum i mod n.
inline long weighted_subsets(int n, int m, int i) {
    long count = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) != m) continue;
        int sum = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) sum += v;
        count += sum % n == ((i % n) + n) % n;
    }
    return count;
}

// Pairs (multiset of size p, m-subset) of Z_n with total weight i mod n.
inline long weighted_pairs(int n, int p, int m, int i) {
    long count = 0;
    for (int w = 0; w < n; ++w) count += weighted_multisets(n, p, w) * weighted_subsets(n, m, ((i - w) % n + n) % n);
    return count;
}

// Multisets of group elements of size m summing to `target`.
inline long group_multisets(const regrep::FiniteAbelianGroup& g, int m, std::size_t target) {
    long count = 0;
    const std::size_t n = g.size();
    std::function<void(std::size_t, int, std::size_t)> rec = [&](std::size_t from, int left, std::size_t sum) {
        if (left == 0) {
            count += sum == target;
            return;
        }
        for (std::size_t v = from; v < n; ++v) rec(v, left - 1, g.add_index(sum, v));
    };
    rec(0, m, 0);
    return count;
}

inline long group_subsets(const regrep::FiniteAbelianGroup& g, int m, std::size_t target) {
    long count = 0;
    const std::size_t n = g.size();
    for (std::uint64_t s = 0; s < (1ull << n); ++s) {
        if (std::popcount(s) != m) continue;
        std::size_t sum = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (s >> v & 1) sum = g.add_index(sum, v);
        count += sum == target;
    }
    return count;
}

inline long zero_sum_subsets(const regrep::FiniteAbelianGroup& g) {
    long count = 0;
    for (int m = 0; m <= static_cast<int>(g.size()); ++m) count += group_subsets(g, m, 0);
    return count;
}

using Poly = std::map<std::vector<int>, long>;

// Leibniz expansion with plain integer coefficients.
inline Poly expand(const regrep::kernels::VariableGrid& m, bool determinant) {
    Poly out;
    std::vector<std::size_t> p(m.size);
    std::iota(p.begin(), p.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
        std::vector<int> mono(m.nvars, 0);
        for (std::size_t i = 0; i < m.size; ++i) ++mono[m.at(i, p[i])];
        out[mono] += (determinant && inversions % 2) ? -1 : 1;
    } while (std::next_permutation(p.begin(), p.end()));
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

inline Poly to_oracle_poly(const regrep::IntPolynomial& p) {
    Poly out;
    for (auto& [m, c] : p.terms()) out[std::vector<int>(m.begin(), m.end())] = c.get_si();
    return out;
}

}  // namespace oracle
