#include "regrep/polynomial.hpp"

#include <cctype>
#include <mutex>

#include "regrep/groups.hpp"
#include "regrep/numtheory.hpp"

namespace regrep {

std::uint32_t total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto k : m) d += k;
    return d;
}

namespace {

// Exact division of a by monic b, both ascending; returns the quotient.
IntPoly1 divide_exact_monic(IntPoly1 a, const IntPoly1& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw InternalError("cyclotomic division: dividend too short");
    IntPoly1 q(a.size() - db, BigInt(0));
    for (std::size_t k = a.size(); k-- > db;) {
        const BigInt c = a[k];
        q[k - db] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    for (std::size_t k = 0; k < db; ++k)
        if (sgn(a[k]) != 0) throw InternalError("cyclotomic division left a remainder");
    return q;
}

// Phi_e, cached; map nodes are stable so returned references stay valid.
const IntPoly1& cyclotomic_cached(std::int64_t e) {
    static std::mutex mu;
    static std::map<std::int64_t, IntPoly1> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    IntPoly1 num(static_cast<std::size_t>(e) + 1, BigInt(0));
    num[0] = -1;
    num[static_cast<std::size_t>(e)] = 1;
    for (auto d : nt::divisors(e)) {
        if (d == e) continue;
        num = divide_exact_monic(std::move(num), cyclotomic_cached(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(e, std::move(num)).first->second;
}

// Reduces ascending coefficients modulo Phi_e to length phi(e).
std::vector<BigInt> reduce_mod(std::vector<BigInt> a, const IntPoly1& phi) {
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = a.size(); k-- > d;) {
        if (sgn(a[k]) == 0) continue;
        const BigInt c = a[k];
        for (std::size_t j = 0; j <= d; ++j) a[k - d + j] -= c * phi[j];
    }
    a.resize(d, BigInt(0));
    return a;
}

}  // namespace

IntPoly1 cyclotomic_polynomial(std::int64_t e) {
    if (e < 1) throw UsageError("cyclotomic polynomial order must be >= 1");
    return cyclotomic_cached(e);
}

CyclotomicInt::CyclotomicInt(std::int64_t root_order) : e_(root_order) {
    if (e_ < 1) throw UsageError("root order must be >= 1");
    c_.assign(cyclotomic_cached(e_).size() - 1, BigInt(0));
}

CyclotomicInt::CyclotomicInt(std::int64_t root_order, const BigInt& value) : CyclotomicInt(root_order) {
    c_[0] = value;
}

CyclotomicInt CyclotomicInt::root_power(std::int64_t root_order, std::int64_t t) {
    CyclotomicInt z(root_order);
    const auto k = static_cast<std::size_t>(nt::mod(t, root_order));
    std::vector<BigInt> a(k + 1, BigInt(0));
    a[k] = 1;
    z.c_ = reduce_mod(std::move(a), cyclotomic_cached(root_order));
    return z;
}

bool CyclotomicInt::is_zero() const {
    for (auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CyclotomicInt::is_rational_integer() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return false;
    return true;
}

BigInt CyclotomicInt::integer_value() const {
    if (!is_rational_integer()) throw InternalError("cyclotomic value " + to_string() + " is not a rational integer");
    return c_[0];
}

void CyclotomicInt::require_same(const CyclotomicInt& o) const {
    if (e_ != o.e_) throw UsageError("cyclotomic integers over different root orders");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    require_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    require_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.require_same(b);
    const std::size_t d = a.c_.size();
    std::vector<BigInt> prod(2 * d - 1, BigInt(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    CyclotomicInt r(a.e_);
    r.c_ = reduce_mod(std::move(prod), cyclotomic_cached(a.e_));
    return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string CyclotomicInt::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        if (!out.empty()) out += sgn(c_[k]) < 0 ? " - " : " + ";
        else if (sgn(c_[k]) < 0) out += "-";
        BigInt a = abs(c_[k]);
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += "z" + std::to_string(e_);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms()) {
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        const BigInt a = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

nlohmann::json to_json(const IntPolynomial& p) {
    auto arr = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) arr.push_back({{"exponents", m}, {"coeff", c.get_str()}});
    return arr;
}

IntPolynomial int_polynomial_from_json(const nlohmann::json& j, std::size_t nvars) {
    if (!j.is_array()) throw UsageError("polynomial JSON must be an array");
    IntPolynomial p(nvars);
    for (auto& t : j) {
        auto m = t.at("exponents").get<Monomial>();
        p.add_term(m, BigInt(t.at("coeff").get<std::string>()));
    }
    return p;
}

IntPolynomial parse_polynomial(std::string_view text, std::size_t nvars) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto fail = [&](const std::string& why) {
        return UsageError("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    IntPolynomial p(nvars);
    if (s == "0") return p;
    std::size_t pos = 0;
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw fail("expected integer at offset " + std::to_string(start));
        return s.substr(start, pos - start);
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw fail("expected '+' or '-'");
        }
        BigInt coeff = 1;
        Monomial m(nvars, 0);
        bool have_factor = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (have_factor) {
                if (s[pos] != '*') throw fail("expected '*'");
                ++pos;
            }
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff *= BigInt(read_int());
            } else if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                const auto var = std::stoul(read_int());
                if (var >= nvars) throw fail("variable index out of range");
                std::uint32_t e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = static_cast<std::uint32_t>(std::stoul(read_int()));
                }
                m[var] += e;
            } else {
                throw fail("unexpected character");
            }
            have_factor = true;
        }
        if (!have_factor) throw fail("empty term");
        p.add_term(m, coeff * sign);
    }
    return p;
}

IntPolynomial to_integer_polynomial(const CycPolynomial& p) {
    IntPolynomial r(p.nvars());
    for (auto& [m, c] : p.terms()) r.add_term(m, c.integer_value());
    return r;
}

IntPolynomial apply_group_action(const FiniteAbelianGroup& g, const GroupElement& gamma, const IntPolynomial& p) {
    if (p.nvars() != g.size()) throw UsageError("polynomial variable count must equal the group order");
    const std::size_t gi = g.index_of(gamma);
    IntPolynomial r(p.nvars());
    Monomial shifted(p.nvars());
    for (auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) shifted[g.add_index(i, gi)] = m[i];
        r.add_term(shifted, c);
    }
    return r;
}

BigInt coefficient_sum(const IntPolynomial& p) {
    BigInt s = 0;
    for (auto& [m, c] : p.terms()) s += c;
    return s;
}

}  // namespace regrep
