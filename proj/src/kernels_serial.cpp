#include <algorithm>
#include <numeric>

#include "regrep/errors.hpp"
#include "regrep/kernels.hpp"

namespace regrep::kernels::serial {

namespace {

void validate(const VariableGrid& m) {
    if (m.size == 0) throw UsageError("matrix must be at least 1x1");
    if (m.entries.size() != m.size * m.size) throw UsageError("matrix entry count does not match size");
    for (auto v : m.entries)
        if (v >= m.nvars) throw UsageError("matrix entry names a variable outside x_0..x_{n-1}");
}

int permutation_sign(const std::vector<std::size_t>& p) {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

IntPolynomial leibniz(const VariableGrid& m, bool signed_sum) {
    validate(m);
    check_guard("leibniz_size", static_cast<std::int64_t>(m.size), kLeibnizMaxSize);
    std::vector<std::size_t> perm(m.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Monomial, std::int64_t> acc;
    Monomial mono(m.nvars);
    do {
        std::fill(mono.begin(), mono.end(), 0);
        for (std::size_t i = 0; i < m.size; ++i) ++mono[m.at(i, perm[i])];
        acc[mono] += signed_sum ? permutation_sign(perm) : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    IntPolynomial r(m.nvars);
    for (auto& [k, c] : acc) r.add_term(k, BigInt(static_cast<long>(c)));
    return r;
}

}  // namespace

IntPolynomial permanent_leibniz(const VariableGrid& m) { return leibniz(m, false); }

IntPolynomial determinant_leibniz(const VariableGrid& m) { return leibniz(m, true); }

IntPolynomial permanent_ryser(const VariableGrid& m) {
    validate(m);
    check_guard("ryser_size", static_cast<std::int64_t>(m.size), kRyserMaxSize);
    const std::size_t l = m.size;
    IntPolynomial total(m.nvars);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << l); ++s) {
        IntPolynomial prod(m.nvars);
        prod.add_term(Monomial(m.nvars, 0), BigInt(1));
        for (std::size_t i = 0; i < l; ++i) {
            IntPolynomial row(m.nvars);
            for (std::size_t j = 0; j < l; ++j)
                if (s >> j & 1u) row += IntPolynomial::variable(m.nvars, m.at(i, j), BigInt(1));
            prod = prod * row;
        }
        if (__builtin_popcountll(s) % 2) total -= prod;
        else total += prod;
    }
    return l % 2 ? -total : total;
}

}  // namespace regrep::kernels::serial
