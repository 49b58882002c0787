#include <omp.h>

#include <atomic>

#include "monomial_index.hpp"
#include "regrep/kernels.hpp"

namespace regrep::kernels {

namespace {

std::atomic<int> g_max_threads{0};

int thread_count() {
    const int cap = g_max_threads.load();
    return cap > 0 ? cap : omp_get_max_threads();
}

void validate(const VariableGrid& m) {
    if (m.size == 0) throw UsageError("matrix must be at least 1x1");
    if (m.entries.size() != m.size * m.size) throw UsageError("matrix entry count does not match size");
    for (auto v : m.entries)
        if (v >= m.nvars) throw UsageError("matrix entry names a variable outside x_0..x_{n-1}");
}

template <class Acc>
IntPolynomial collect(const detail::MonomialIndex& index, std::size_t degree, const std::vector<Acc>& acc) {
    IntPolynomial r(index.nvars());
    for (std::size_t k = 0; k < index.count(degree); ++k)
        if (acc[k] != 0) r.add_term(index.top_monomial(k), detail::to_bigint(static_cast<__int128>(acc[k])));
    return r;
}

// Depth-first expansion of rows [row, l) with `used` columns already taken.
struct LeibnizWalker {
    const VariableGrid& m;
    const detail::MonomialIndex& index;
    bool signed_sum;
    std::vector<std::int64_t>& acc;

    void walk(std::size_t row, std::uint32_t used, std::uint32_t mono, int sign) const {
        if (row == m.size) {
            acc[mono] += signed_sum ? sign : 1;
            return;
        }
        for (std::size_t c = 0; c < m.size; ++c) {
            if (used >> c & 1u) continue;
            const int flip = __builtin_popcount(used >> c) & 1;  // columns > c already used
            walk(row + 1, used | (1u << c), index.next(row, mono, m.at(row, c)), flip ? -sign : sign);
        }
    }
};

IntPolynomial leibniz(const VariableGrid& m, bool signed_sum) {
    validate(m);
    check_guard("leibniz_size", static_cast<std::int64_t>(m.size), kLeibnizMaxSize);
    const std::size_t l = m.size;
    const detail::MonomialIndex index(m.nvars, l);
    const std::size_t top = index.count(l);
    if (l == 1) {
        std::vector<std::int64_t> acc(top, 0);
        acc[index.next(0, 0, m.at(0, 0))] = 1;
        return collect(index, l, acc);
    }
    std::vector<std::int64_t> total(top, 0);
    const int tasks = static_cast<int>(l * l);
#pragma omp parallel num_threads(thread_count())
    {
        std::vector<std::int64_t> acc(top, 0);
        LeibnizWalker walker{m, index, signed_sum, acc};
#pragma omp for schedule(dynamic, 1)
        for (int t = 0; t < tasks; ++t) {
            const std::size_t c0 = static_cast<std::size_t>(t) / l, c1 = static_cast<std::size_t>(t) % l;
            if (c0 == c1) continue;
            const int sign = c1 < c0 ? -1 : 1;
            const std::uint32_t mono = index.next(1, index.next(0, 0, m.at(0, c0)), m.at(1, c1));
            walker.walk(2, (1u << c0) | (1u << c1), mono, sign);
        }
#pragma omp critical(regrep_leibniz_merge)
        for (std::size_t k = 0; k < top; ++k) total[k] += acc[k];
    }
    return collect(index, l, total);
}

// Expands the product of the l row forms (each a sparse list of variable,
// coefficient pairs) into `cur`, a dense coefficient array at degree l.
void expand_product(const detail::MonomialIndex& index,
                    const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& forms,
                    std::vector<__int128>& cur, std::vector<__int128>& nxt) {
    const std::size_t l = forms.size();
    std::fill(cur.begin(), cur.begin() + 1, 0);
    cur[0] = 1;
    for (std::size_t k = 0; k < l; ++k) {
        const std::size_t n_cur = index.count(k), n_nxt = index.count(k + 1);
        std::fill(nxt.begin(), nxt.begin() + static_cast<std::ptrdiff_t>(n_nxt), 0);
        const auto& table = index.next_table(k);
        const std::size_t nv = index.nvars();
        for (std::size_t idx = 0; idx < n_cur; ++idx) {
            const __int128 c = cur[idx];
            if (c == 0) continue;
            const std::uint32_t* row = &table[idx * nv];
            for (auto [v, a] : forms[k]) nxt[row[v]] += c * a;
        }
        std::swap(cur, nxt);
    }
}

}  // namespace

IntPolynomial permanent_leibniz(const VariableGrid& m) { return leibniz(m, false); }

IntPolynomial determinant_leibniz(const VariableGrid& m) { return leibniz(m, true); }

IntPolynomial permanent_ryser(const VariableGrid& m) {
    validate(m);
    const std::size_t l = m.size;
    check_guard("ryser_size", static_cast<std::int64_t>(l), kRyserMaxSize);
    const detail::MonomialIndex index(m.nvars, l);
    std::size_t all_levels = 0;
    for (std::size_t k = 0; k <= l; ++k) all_levels += index.count(k);
    const std::int64_t work = static_cast<std::int64_t>(all_levels) *
                              static_cast<std::int64_t>(std::min(m.nvars, l)) << l;
    check_guard("ryser_work", work, kRyserWorkLimit);

    std::size_t widest = 0;
    for (std::size_t k = 0; k <= l; ++k) widest = std::max(widest, index.count(k));
    const std::size_t top = index.count(l);
    const std::uint64_t subsets = std::uint64_t{1} << l;
    const std::uint64_t block = std::min<std::uint64_t>(subsets, 64);
    const std::int64_t blocks = static_cast<std::int64_t>(subsets / block);

    std::vector<__int128> total(top, 0);
#pragma omp parallel num_threads(thread_count())
    {
        std::vector<__int128> acc(top, 0), cur(widest, 0), nxt(widest, 0);
        std::vector<std::vector<std::int64_t>> counts(l, std::vector<std::int64_t>(m.nvars, 0));
        std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> forms(l);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const std::uint64_t start = static_cast<std::uint64_t>(b) * block;
            std::uint64_t gray = start ^ (start >> 1);
            for (std::size_t i = 0; i < l; ++i) {
                std::fill(counts[i].begin(), counts[i].end(), 0);
                for (std::size_t j = 0; j < l; ++j)
                    if (gray >> j & 1u) ++counts[i][m.at(i, j)];
            }
            for (std::uint64_t k = start; k < start + block; ++k) {
                if (k != start) {
                    const auto bit = static_cast<std::size_t>(__builtin_ctzll(k));
                    gray ^= std::uint64_t{1} << bit;
                    const std::int64_t delta = (gray >> bit & 1u) ? 1 : -1;
                    for (std::size_t i = 0; i < l; ++i) counts[i][m.at(i, bit)] += delta;
                }
                if (gray == 0) continue;
                for (std::size_t i = 0; i < l; ++i) {
                    forms[i].clear();
                    for (std::size_t v = 0; v < m.nvars; ++v)
                        if (counts[i][v] != 0) forms[i].emplace_back(static_cast<std::uint32_t>(v), counts[i][v]);
                }
                expand_product(index, forms, cur, nxt);
                const bool negative = (__builtin_popcountll(gray) + l) % 2 == 1;
                for (std::size_t t = 0; t < top; ++t)
                    if (cur[t] != 0) acc[t] += negative ? -cur[t] : cur[t];
            }
        }
#pragma omp critical(regrep_ryser_merge)
        for (std::size_t t = 0; t < top; ++t) total[t] += acc[t];
    }
    return collect(index, l, total);
}

void set_max_threads(int k) { g_max_threads.store(k > 0 ? k : 0); }

int max_threads() { return thread_count(); }

}  // namespace regrep::kernels
