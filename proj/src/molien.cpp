#include "regrep/molien.hpp"

#include <algorithm>
#include <functional>

#include "regrep/errors.hpp"
#include "regrep/numtheory.hpp"
#include "regrep/polynomial.hpp"

namespace regrep::molien {

namespace {

BigInt exact_div(const BigInt& num, std::int64_t den, const char* what) {
    const BigInt d(static_cast<long>(den));
    if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t()))
        throw InternalError(std::string(what) + ": closed form is not an integer");
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    return r;
}

int parity_sign(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

void require_nonneg(std::int64_t v, const char* what) {
    if (v < 0) throw UsageError(std::string(what) + " must be >= 0");
}

void guard_compositions(std::int64_t n, std::int64_t m) {
    const BigInt count = nt::binomial(n + m - 1, m);
    check_guard("enumeration", count.fits_slong_p() ? count.get_si() : INT64_MAX, kEnumerationLimit);
}

// Histogram over residues mod n of sum j*lambda_j, lambda a composition of
// total into n parts.
std::vector<std::int64_t> composition_weights(std::int64_t n, std::int64_t total) {
    guard_compositions(n, total);
    std::vector<std::int64_t> hist(static_cast<std::size_t>(n), 0);
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec = [&](std::int64_t j, std::int64_t left,
                                                                           std::int64_t w) {
        if (j == n - 1) {
            ++hist[static_cast<std::size_t>((w + j * left) % n)];
            return;
        }
        for (std::int64_t k = 0; k <= left; ++k) rec(j + 1, left - k, (w + j * k) % n);
    };
    rec(0, total, 0);
    return hist;
}

// Histogram over residues mod n of sum J, J an m-subset of {0..n-1}.
std::vector<std::int64_t> subset_weights(std::int64_t n, std::int64_t m) {
    check_guard("subset_enumeration", n, 24);
    std::vector<std::int64_t> hist(static_cast<std::size_t>(n), 0);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (m >= 0 && __builtin_popcount(s) != m) continue;
        std::int64_t w = 0;
        for (std::int64_t j = 0; j < n; ++j)
            if (s >> j & 1u) w += j;
        ++hist[static_cast<std::size_t>(w % n)];
    }
    return hist;
}

TruncatedSeries assemble_sym(const std::map<std::int64_t, BigInt>& sums, std::int64_t group_order, int order) {
    std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (auto& [d, s] : sums) {
        if (sgn(s) == 0) continue;
        const std::int64_t k = group_order / d;
        // (1 - t^d)^{-k} = sum_b C(k+b-1, b) t^{bd}
        for (std::int64_t b = 0; b * d <= order; ++b) acc[static_cast<std::size_t>(b * d)] += s * nt::binomial(k + b - 1, b);
    }
    TruncatedSeries out(order);
    for (int m = 0; m <= order; ++m) out[m] = Rational(exact_div(acc[static_cast<std::size_t>(m)], group_order, "sym_series"));
    return out;
}

TruncatedSeries assemble_ext(const std::map<std::int64_t, BigInt>& sums, std::int64_t group_order, int order) {
    std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (auto& [d, s] : sums) {
        if (sgn(s) == 0) continue;
        const std::int64_t k = group_order / d;
        // (1 - (-t)^d)^k = sum_a C(k, a) (-1)^a (-1)^{da} t^{da}
        for (std::int64_t a = 0; a <= k && a * d <= order; ++a)
            acc[static_cast<std::size_t>(a * d)] += s * nt::binomial(k, a) * parity_sign(a + d * a);
    }
    TruncatedSeries out(order);
    for (int m = 0; m <= order; ++m) out[m] = Rational(exact_div(acc[static_cast<std::size_t>(m)], group_order, "ext_series"));
    return out;
}

std::map<std::int64_t, BigInt> profile_sums(const OrderProfile& profile) {
    std::map<std::int64_t, BigInt> sums;
    for (auto [d, c] : profile) sums[d] = BigInt(static_cast<long>(c));
    return sums;
}

std::map<std::int64_t, BigInt> group_sums(const FiniteAbelianGroup& g, std::int64_t i) {
    if (g.is_single_cyclic()) return cyclic_character_sums(g.order(), i);
    if (i < 0 || i >= g.order())
        throw UsageError("character index must lie in 0.." + std::to_string(g.order() - 1) + " for " + g.name());
    return character_sums_by_order(g, static_cast<std::size_t>(i));
}

}  // namespace

BigInt a_coeff(std::int64_t n, std::int64_t m, std::int64_t i) {
    require_nonneg(n, "n");
    require_nonneg(m, "m");
    if (n == 0 && m == 0) throw UsageError("a_coeff is undefined at (n, m) = (0, 0)");
    if (n > 0) i = nt::mod(i, n);
    const std::int64_t g = nt::gcd(n, m);
    BigInt s = 0;
    for (auto d : nt::divisors(g)) s += nt::ramanujan_sum(d, i) * nt::binomial((n + m) / d, n / d);
    return exact_div(s, n + m, "a_coeff");
}

BigInt a_bruteforce(std::int64_t n, std::int64_t m, std::int64_t i) {
    if (n < 1) throw UsageError("a_bruteforce needs n >= 1");
    require_nonneg(m, "m");
    const auto hist = composition_weights(n, m);
    return BigInt(static_cast<long>(hist[static_cast<std::size_t>(nt::mod(i, n))]));
}

BigInt dim_sym_wedge(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t i) {
    if (n < 1) throw UsageError("dim_sym_wedge needs n >= 1");
    require_nonneg(p, "p");
    require_nonneg(m, "m");
    if (m > n) return 0;
    i = nt::mod(i, n);
    const std::int64_t g = nt::gcd(nt::gcd(n, p), m);
    BigInt s = 0;
    for (auto d : nt::divisors(g))
        s += nt::ramanujan_sum(d, i) * nt::multinomial({m / d, p / d, (n - m) / d}) * parity_sign(m / d);
    return exact_div(s * parity_sign(m), p + n, "dim_sym_wedge");
}

BigInt dim_bruteforce(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t i) {
    if (n < 1) throw UsageError("dim_bruteforce needs n >= 1");
    require_nonneg(p, "p");
    require_nonneg(m, "m");
    if (m > n) return 0;
    const auto lam = composition_weights(n, p);
    const auto sub = subset_weights(n, m);
    const std::int64_t target = nt::mod(i, n);
    std::int64_t count = 0;
    for (std::int64_t r = 0; r < n; ++r)
        count += lam[static_cast<std::size_t>(r)] * sub[static_cast<std::size_t>(nt::mod(target - r, n))];
    return BigInt(static_cast<long>(count));
}

BigInt b_coeff(std::int64_t n, std::int64_t m, std::int64_t i) {
    if (n < 1) throw UsageError("b_coeff needs n >= 1");
    require_nonneg(m, "m");
    if (m > n) return 0;
    i = nt::mod(i, n);
    BigInt s = 0;
    for (auto d : nt::divisors(nt::gcd(n, m)))
        s += nt::ramanujan_sum(d, i) * nt::binomial(n / d, m / d) * parity_sign(m / d);
    return exact_div(s * parity_sign(m), n, "b_coeff");
}

std::map<std::int64_t, BigInt> character_sums_by_order(const FiniteAbelianGroup& g, std::size_t chi_index) {
    if (chi_index >= g.size()) throw UsageError("character index out of range for " + g.name());
    const std::int64_t e = g.exponent();
    std::map<std::int64_t, CyclotomicInt> sums;
    const Character chi = g.character(chi_index);
    for (std::size_t a = 0; a < g.size(); ++a) {
        const auto t = g.char_eval_exponent(chi, g.element(g.neg_index(a)));
        auto [it, fresh] = sums.try_emplace(g.order_of_index(a), e);
        it->second += CyclotomicInt::root_power(e, t);
    }
    std::map<std::int64_t, BigInt> out;
    for (auto& [d, z] : sums) out[d] = z.integer_value();
    return out;
}

std::map<std::int64_t, BigInt> cyclic_character_sums(std::int64_t n, std::int64_t i) {
    std::map<std::int64_t, BigInt> out;
    for (auto d : nt::divisors(n)) out[d] = nt::ramanujan_sum(d, i);
    return out;
}

TruncatedSeries sym_series(const FiniteAbelianGroup& g, std::int64_t i, int order) {
    return assemble_sym(group_sums(g, i), g.order(), order);
}

TruncatedSeries sym_series(const OrderProfile& profile, int order) {
    return assemble_sym(profile_sums(profile), profile_group_order(profile), order);
}

TruncatedSeries ext_series(const FiniteAbelianGroup& g, std::int64_t i, int order) {
    return assemble_ext(group_sums(g, i), g.order(), order);
}

TruncatedSeries ext_series(const OrderProfile& profile, int order) {
    return assemble_ext(profile_sums(profile), profile_group_order(profile), order);
}

BivariateSeries bigraded_series(std::int64_t n, std::int64_t i, int order_s, int order_t) {
    if (n < 1) throw UsageError("bigraded_series needs n >= 1");
    BivariateSeries total(order_s, order_t);
    for (auto d : nt::divisors(n)) {
        const std::int64_t k = n / d;
        BivariateSeries wedge(order_s, order_t), sym(order_s, order_t);
        for (std::int64_t a = 0; a <= k && a * d <= order_t; ++a)
            wedge(0, static_cast<int>(a * d)) = Rational(nt::binomial(k, a) * parity_sign((d + 1) * a));
        for (std::int64_t b = 0; b * d <= order_s; ++b)
            sym(static_cast<int>(b * d), 0) = Rational(nt::binomial(k + b - 1, b));
        total += (wedge * sym) * Rational(nt::ramanujan_sum(d, i));
    }
    total *= make_rational(1, BigInt(static_cast<long>(n)));
    return total;
}

BigInt ext_total_dim(std::int64_t n, std::int64_t i) {
    if (n < 1) throw UsageError("ext_total_dim needs n >= 1");
    BigInt s = 0;
    for (auto d : nt::divisors(n))
        if (d % 2 == 1) s += nt::ramanujan_sum(d, i) * pow_int(2, static_cast<std::uint64_t>(n / d));
    return exact_div(s, n, "ext_total_dim");
}

BigInt ext_total_dim_invariants(const OrderProfile& profile) {
    const std::int64_t n = profile_group_order(profile);
    BigInt s = 0;
    for (auto [d, c] : profile) {
        if (d % 2 == 0) continue;
        if (n % d != 0) throw UsageError("order profile: element order " + std::to_string(d) + " does not divide the group order");
        s += pow_int(2, static_cast<std::uint64_t>(n / d)) * c;
    }
    return exact_div(s, n, "ext_total_dim_invariants");
}

BigInt subset_weight_count(std::int64_t n, std::int64_t i) {
    if (n < 1) throw UsageError("subset_weight_count needs n >= 1");
    return BigInt(static_cast<long>(subset_weights(n, -1)[static_cast<std::size_t>(nt::mod(i, n))]));
}

BigInt n_g(const FiniteAbelianGroup& g) { return ext_total_dim_invariants(order_profile(g)); }

Report check_reciprocity(std::int64_t max_total) {
    Report r;
    r.check = "reciprocity";
    r.parameters = {{"max_total", max_total}};
    ReportTimer timer(r);
    std::int64_t compared = 0;
    for (std::int64_t p = 0; p <= max_total; ++p)
        for (std::int64_t q = 0; p + q <= max_total; ++q)
            for (std::int64_t m = 0; p + q + m <= max_total; ++m) {
                if (q + m == 0 || p + m == 0) continue;
                for (std::int64_t i = 0; i <= max_total; ++i) {
                    const BigInt lhs = dim_sym_wedge(q + m, p, m, i);
                    const BigInt rhs = dim_sym_wedge(p + m, q, m, i);
                    ++compared;
                    if (lhs != rhs)
                        r.failures.push_back({{"p", p}, {"q", q}, {"m", m}, {"i", i},
                                              {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}});
                }
            }
    r.details["compared"] = compared;
    return r;
}

Report check_fredman(std::int64_t max_total) {
    Report r;
    r.check = "fredman";
    r.parameters = {{"max_total", max_total}};
    ReportTimer timer(r);
    std::int64_t compared = 0;
    for (std::int64_t n = 1; n < max_total; ++n)
        for (std::int64_t m = 1; n + m <= max_total; ++m)
            for (std::int64_t i = 0; i <= max_total; ++i) {
                const BigInt lhs = a_coeff(n, m, i), rhs = a_coeff(m, n, i);
                const BigInt brute_l = a_bruteforce(n, m, i), brute_r = a_bruteforce(m, n, i);
                ++compared;
                if (lhs != rhs || lhs != brute_l || rhs != brute_r)
                    r.failures.push_back({{"n", n}, {"m", m}, {"i", i}, {"a_nm", lhs.get_str()},
                                          {"a_mn", rhs.get_str()}, {"brute_nm", brute_l.get_str()},
                                          {"brute_mn", brute_r.get_str()}});
            }
    r.details["compared"] = compared;
    return r;
}

Identity parse_identity(const std::string& name) {
    if (name == "log2var") return Identity::log2var;
    if (name == "log3var") return Identity::log3var;
    if (name == "A") return Identity::A;
    if (name == "B") return Identity::B;
    throw UsageError("unknown identity '" + name + "' (expected log2var, log3var, A or B)");
}

std::string identity_name(Identity which) {
    switch (which) {
        case Identity::log2var: return "log2var";
        case Identity::log3var: return "log3var";
        case Identity::A: return "A";
        case Identity::B: return "B";
    }
    return "?";
}

namespace {

// Series in (x, y, z): one bivariate (x, y) series per power of z.
struct TrivariateSeries {
    std::vector<BivariateSeries> by_z;

    explicit TrivariateSeries(int order) : by_z(static_cast<std::size_t>(order) + 1, BivariateSeries(order, order)) {}

    int order() const { return static_cast<int>(by_z.size()) - 1; }

    TrivariateSeries operator*(const TrivariateSeries& o) const {
        TrivariateSeries r(order());
        for (int a = 0; a <= order(); ++a)
            for (int b = 0; a + b <= order(); ++b) r.by_z[static_cast<std::size_t>(a + b)] += by_z[static_cast<std::size_t>(a)] * o.by_z[static_cast<std::size_t>(b)];
        return r;
    }
    TrivariateSeries& operator+=(const TrivariateSeries& o) {
        for (std::size_t k = 0; k < by_z.size(); ++k) by_z[k] += o.by_z[k];
        return *this;
    }
    TrivariateSeries& operator*=(const Rational& s) {
        for (auto& b : by_z) b *= s;
        return *this;
    }
};

// log(1 + u) through total degree `order`, u of total degree >= 1.
TrivariateSeries log1p_total(const TrivariateSeries& u) {
    const int n = u.order();
    TrivariateSeries result(n), power = u;
    for (int k = 1; k <= n; ++k) {
        TrivariateSeries term = power;
        term *= make_rational(k % 2 ? 1 : -1, k);
        result += term;
        if (k < n) power = power * u;
    }
    return result;
}

struct Comparison {
    Rational max_discrepancy = 0;
    std::int64_t compared = 0;
};

void record(Report& r, Comparison& cmp, const Rational& lhs, const Rational& rhs, nlohmann::json where) {
    ++cmp.compared;
    const Rational diff = abs(lhs - rhs);
    if (diff > cmp.max_discrepancy) cmp.max_discrepancy = diff;
    if (sgn(diff) != 0 && r.failures.size() < 50) {
        where["lhs"] = to_string(lhs);
        where["rhs"] = to_string(rhs);
        r.failures.push_back(std::move(where));
    }
}

void check_log2var(Report& r, Comparison& cmp, int order, std::int64_t i) {
    BivariateSeries rhs(order, order);
    for (int d = 1; d <= order; ++d) {
        BivariateSeries u(order, order);
        u(d, 0) = -1;
        u(0, d) = -1;
        rhs -= log1p(u) * make_rational(nt::ramanujan_sum(d, i), d);
    }
    for (int n = 0; n <= order; ++n)
        for (int m = 0; m <= order; ++m) {
            if (n == 0 && m == 0) continue;
            record(r, cmp, Rational(a_coeff(n, m, i)), rhs(n, m), {{"i", i}, {"n", n}, {"m", m}});
        }
}

void check_log3var(Report& r, Comparison& cmp, int order, std::int64_t i,
                   const std::vector<TrivariateSeries>& logs) {
    TrivariateSeries rhs(order);
    for (int d = 1; d <= order; ++d) {
        TrivariateSeries term = logs[static_cast<std::size_t>(d)];
        term *= make_rational(-nt::ramanujan_sum(d, i), d);
        rhs += term;
    }
    // x^p y^q z^m  <->  dim(S^p R (x) Lambda^m R) for C_{q+m}
    for (int p = 0; p <= order; ++p)
        for (int q = 0; p + q <= order; ++q)
            for (int m = 0; p + q + m <= order; ++m) {
                if (p + q + m == 0) continue;
                const BigInt lhs = (q + m == 0) ? a_coeff(0, p, i) : dim_sym_wedge(q + m, p, m, i);
                record(r, cmp, Rational(lhs), rhs.by_z[static_cast<std::size_t>(m)](p, q),
                       {{"i", i}, {"p", p}, {"q", q}, {"m", m}});
            }
}

void check_A(Report& r, Comparison& cmp, int order, std::int64_t i) {
    TruncatedSeries lhs(order), rhs(order);
    for (int m = 1; m <= order; ++m) lhs[m] = Rational(b_coeff(m, m, i));
    for (int d = 1; d <= order; ++d)
        rhs -= log1p(TruncatedSeries::monomial(order, d, d % 2 ? -1 : 1)) *
               make_rational(nt::ramanujan_sum(d, i), d);
    for (int m = 1; m <= order; ++m) record(r, cmp, lhs[m], rhs[m], {{"i", i}, {"degree", m}});
    if (i == 0) {
        // z/(1-z^2) = sum_d (phi(d)/d) log(1 + z^d)
        const TruncatedSeries closed = expand_rational({0, 1}, {1, 0, -1}, order);
        TruncatedSeries logs(order);
        for (int d = 1; d <= order; ++d)
            logs += log1p(TruncatedSeries::monomial(order, d)) * make_rational(nt::euler_phi(d), d);
        for (int m = 0; m <= order; ++m) record(r, cmp, closed[m], logs[m], {{"i", 0}, {"degree", m}, {"form", "closed"}});
        for (int m = 0; m <= order; ++m) record(r, cmp, closed[m], lhs[m], {{"i", 0}, {"degree", m}, {"form", "dims"}});
        r.details["exp_closed_form"] = exp(closed).to_json();
    }
}

void check_B(Report& r, Comparison& cmp, int order, std::int64_t i) {
    TruncatedSeries lhs(order), rhs(order);
    for (int q = 1; q <= order; ++q) lhs[q] = Rational(a_coeff(q, 0, i));
    for (int d = 1; d <= order; ++d)
        rhs -= log1p(TruncatedSeries::monomial(order, d, -1)) *
               make_rational(nt::ramanujan_sum(d, i), d);
    // Closed form: sum of y^q over q | i, which is y/(1-y) for i = 0.
    TruncatedSeries closed(order);
    if (i == 0) {
        closed = expand_rational({0, 1}, {1, -1}, order);
    } else {
        for (int q = 1; q <= order; ++q)
            if (i % q == 0) closed[q] = 1;
    }
    for (int q = 1; q <= order; ++q) {
        record(r, cmp, lhs[q], rhs[q], {{"i", i}, {"degree", q}});
        record(r, cmp, closed[q], rhs[q], {{"i", i}, {"degree", q}, {"form", "closed"}});
    }
}

}  // namespace

Report check_identity(Identity which, int order, std::vector<std::int64_t> weights) {
    if (order < 1 || order > 30) throw UsageError("identity order must lie in 1..30");
    if (weights.empty()) {
        const int top = which == Identity::log3var ? 2 : 5;
        for (int i = 0; i <= top; ++i) weights.push_back(i);
    }
    Report r;
    r.check = "identity";
    r.parameters = {{"which", identity_name(which)}, {"order", order}, {"weights", weights}};
    ReportTimer timer(r);
    Comparison cmp;
    std::vector<TrivariateSeries> logs;
    if (which == Identity::log3var) {
        // log(1 - x^d - y^d + (-z)^d) does not depend on the weight.
        logs.emplace_back(order);
        for (int d = 1; d <= order; ++d) {
            TrivariateSeries u(order);
            u.by_z[0](d, 0) = -1;
            u.by_z[0](0, d) = -1;
            u.by_z[static_cast<std::size_t>(d)](0, 0) = d % 2 ? -1 : 1;
            logs.push_back(log1p_total(u));
        }
    }
    for (auto i : weights) {
        switch (which) {
            case Identity::log2var: check_log2var(r, cmp, order, i); break;
            case Identity::log3var: check_log3var(r, cmp, order, i, logs); break;
            case Identity::A: check_A(r, cmp, order, i); break;
            case Identity::B: check_B(r, cmp, order, i); break;
        }
    }
    r.details["compared"] = cmp.compared;
    r.details["max_discrepancy"] = to_string(cmp.max_discrepancy);
    return r;
}

}  // namespace regrep::molien
