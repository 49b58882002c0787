#pragma once

#include <cstdint>
#include <vector>

#include "regrep/errors.hpp"
#include "regrep/kernels.hpp"
#include "regrep/numtheory.hpp"
#include "regrep/polynomial.hpp"

namespace regrep::kernels::detail {

// Dense numbering of all monomials of each degree 0..max_degree in nvars
// variables, with successor tables: next(k, idx, v) is the index at degree k+1
// of (monomial idx at degree k) * x_v.
class MonomialIndex {
   public:
    MonomialIndex(std::size_t nvars, std::size_t max_degree) : nvars_(nvars) {
        const auto total = nt::binomial(static_cast<std::int64_t>(nvars + max_degree),
                                        static_cast<std::int64_t>(max_degree));
        check_guard("dense_monomials", total.fits_slong_p() ? total.get_si() : INT64_MAX, kDenseMonomialLimit);
        // Each monomial m of degree k+1 is created once, from m / x_last where
        // x_last is its highest variable. For v below last(m), m * x_v equals
        // ((m / x_last) * x_v) * x_last, whose entry already exists.
        std::vector<std::uint32_t> last{0}, parent{0};
        counts_.push_back(1);
        for (std::size_t k = 0; k < max_degree; ++k) {
            const std::size_t n_cur = counts_[k];
            std::vector<std::uint32_t> table(n_cur * nvars);
            std::vector<std::uint32_t> next_last, next_parent;
            for (std::size_t idx = 0; idx < n_cur; ++idx)
                for (std::size_t v = last[idx]; v < nvars; ++v) {
                    table[idx * nvars + v] = static_cast<std::uint32_t>(next_last.size());
                    next_last.push_back(static_cast<std::uint32_t>(v));
                    next_parent.push_back(static_cast<std::uint32_t>(idx));
                }
            if (k > 0) {
                const auto& prev = next_[k - 1];
                for (std::size_t idx = 0; idx < n_cur; ++idx) {
                    const std::uint32_t lv = last[idx];
                    for (std::size_t v = 0; v < lv; ++v) {
                        const std::uint32_t sibling = prev[static_cast<std::size_t>(parent[idx]) * nvars + v];
                        table[idx * nvars + v] = table[static_cast<std::size_t>(sibling) * nvars + lv];
                    }
                }
            }
            next_.push_back(std::move(table));
            parents_.push_back(std::move(parent));
            lasts_.push_back(std::move(last));
            counts_.push_back(next_last.size());
            last = std::move(next_last);
            parent = std::move(next_parent);
        }
        parents_.push_back(std::move(parent));
        lasts_.push_back(std::move(last));
        top_.reserve(counts_.back());
        for (std::size_t idx = 0; idx < counts_.back(); ++idx) {
            Monomial m(nvars, 0);
            std::size_t cur = idx;
            for (std::size_t k = max_degree; k > 0; --k) {
                ++m[lasts_[k][cur]];
                cur = parents_[k][cur];
            }
            top_.push_back(std::move(m));
        }
    }

    std::size_t count(std::size_t degree) const { return counts_[degree]; }
    std::uint32_t next(std::size_t degree, std::uint32_t idx, std::uint32_t var) const {
        return next_[degree][static_cast<std::size_t>(idx) * nvars_ + var];
    }
    const std::vector<std::uint32_t>& next_table(std::size_t degree) const { return next_[degree]; }
    const Monomial& top_monomial(std::size_t idx) const { return top_[idx]; }
    std::size_t nvars() const { return nvars_; }

   private:
    std::size_t nvars_;
    std::vector<std::vector<std::uint32_t>> next_;
    std::vector<std::size_t> counts_;
    std::vector<std::vector<std::uint32_t>> parents_, lasts_;
    std::vector<Monomial> top_;
};

inline BigInt to_bigint(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

}  // namespace regrep::kernels::detail
