#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "regrep/bigint.hpp"
#include "regrep/errors.hpp"
#include "regrep/series.hpp"

namespace regrep {

class FiniteAbelianGroup;
struct GroupElement;

/// Exponent vector (k_0, ..., k_{n-1}) over the variables x_0..x_{n-1}.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

/// Lexicographic order with x_0 > x_1 > ...; iteration and serialization
/// follow it, so x_0^n comes first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

/// Phi_e as ascending coefficients, from x^e - 1 = prod_{d | e} Phi_d.
IntPoly1 cyclotomic_polynomial(std::int64_t e);

/// Element of Z[zeta_e], stored as coefficients on 1, zeta, ..., zeta^{phi(e)-1}
/// (reduction modulo Phi_e, so equality is exact and coefficientwise).
class CyclotomicInt {
   public:
    explicit CyclotomicInt(std::int64_t root_order);
    CyclotomicInt(std::int64_t root_order, const BigInt& value);

    /// zeta_e^t for any integer t.
    static CyclotomicInt root_power(std::int64_t root_order, std::int64_t t);

    std::int64_t root_order() const noexcept { return e_; }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    bool is_zero() const;
    bool is_rational_integer() const;
    /// Throws InternalError unless the value lies in Z.
    BigInt integer_value() const;

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    CyclotomicInt operator-() const;
    bool operator==(const CyclotomicInt& o) const { return e_ == o.e_ && c_ == o.c_; }

    std::string to_string() const;

   private:
    void require_same(const CyclotomicInt& o) const;

    std::int64_t e_;
    std::vector<BigInt> c_;
};

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const CyclotomicInt& v) { return v.is_zero(); }

/// Sparse multivariate polynomial, canonical: no zero coefficients are stored.
template <class Coeff>
class SparsePolynomial {
   public:
    using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

    explicit SparsePolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    /// The single variable x_i with coefficient `one`.
    static SparsePolynomial variable(std::size_t nvars, std::size_t i, const Coeff& one) {
        SparsePolynomial p(nvars);
        Monomial m(nvars, 0);
        m.at(i) = 1;
        p.add_term(m, one);
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Monomial& m, const Coeff& c) {
        if (m.size() != nvars_) throw UsageError("monomial length does not match variable count");
        if (regrep::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (regrep::is_zero(it->second)) terms_.erase(it);
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        require_same(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        require_same(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.require_same(b);
        SparsePolynomial r(a.nvars_);
        Monomial m(a.nvars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    SparsePolynomial scaled(const Coeff& s) const {
        SparsePolynomial r(nvars_);
        for (auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    SparsePolynomial operator-() const {
        SparsePolynomial r(nvars_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    bool operator==(const SparsePolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Coefficient of m, or nullptr when absent.
    const Coeff* find(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    std::vector<Monomial> support() const {
        std::vector<Monomial> out;
        out.reserve(terms_.size());
        for (auto& [m, c] : terms_) out.push_back(m);
        return out;
    }

   private:
    void require_same(const SparsePolynomial& o) const {
        if (nvars_ != o.nvars_) throw UsageError("polynomials over different variable counts");
    }

    std::size_t nvars_;
    TermMap terms_;
};

using IntPolynomial = SparsePolynomial<BigInt>;
using CycPolynomial = SparsePolynomial<CyclotomicInt>;

/// Human-readable form, e.g. "2*x0^4 + 10*x0^2*x1*x2 - x1^2"; "0" if empty.
std::string to_string(const IntPolynomial& p);
/// JSON list of {"exponents": [...], "coeff": "decimal"} in MonomialOrder.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial int_polynomial_from_json(const nlohmann::json& j, std::size_t nvars);
/// Parses the human-readable form (also accepts "x0x1" juxtaposition-free
/// products written with '*', integer coefficients, and '^' exponents).
IntPolynomial parse_polynomial(std::string_view text, std::size_t nvars);

/// Converts by taking integer values of every coefficient; throws
/// InternalError if any coefficient is not a rational integer.
IntPolynomial to_integer_polynomial(const CycPolynomial& p);

/// Substitutes x_i -> x_{i + gamma} (group addition on variable indices).
IntPolynomial apply_group_action(const FiniteAbelianGroup& g, const GroupElement& gamma, const IntPolynomial& p);

/// Sum of all coefficients (value at x_i = 1).
BigInt coefficient_sum(const IntPolynomial& p);

}  // namespace regrep
