#include "regrep/cayley.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "regrep/errors.hpp"
#include "regrep/molien.hpp"
#include "regrep/numtheory.hpp"

namespace regrep::cayley {

namespace {

// Guard for the composition enumeration behind hall_support.
constexpr std::int64_t kSupportLimit = 10'000'000;
constexpr std::size_t kFactoredMaxOrder = 10;

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

nlohmann::json monomial_list(const std::vector<Monomial>& ms) {
    auto arr = nlohmann::json::array();
    for (auto& m : ms) arr.push_back(m);
    return arr;
}

std::vector<Monomial> sorted_support(const IntPolynomial& p) { return p.support(); }

// Elements of a not in b and of b not in a; both inputs sorted by MonomialOrder.
std::pair<std::vector<Monomial>, std::vector<Monomial>> symmetric_difference(const std::vector<Monomial>& a,
                                                                             const std::vector<Monomial>& b) {
    std::vector<Monomial> only_a, only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a), MonomialOrder{});
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b), MonomialOrder{});
    return {only_a, only_b};
}

Monomial permutation_monomial(const FiniteAbelianGroup& g, const std::vector<std::size_t>& pi) {
    Monomial m(g.size(), 0);
    for (std::size_t i = 0; i < pi.size(); ++i) ++m[g.add_index(i, pi[i])];
    return m;
}

int permutation_sign(const std::vector<std::size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t even_cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) ++even_cycles;
    }
    return even_cycles % 2 ? -1 : 1;
}

// psi(gamma) for the sum of all characters; always +1 or -1.
int psi_value(const FiniteAbelianGroup& g, const Character& psi, std::size_t gamma) {
    const auto t = g.char_eval_exponent(psi, g.element(gamma));
    if (t == 0) return 1;
    if (2 * t == g.exponent()) return -1;
    throw InternalError("sum of all characters has order > 2");
}

IntPolynomial power_sum(std::size_t nvars, std::uint32_t p) {
    IntPolynomial s(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        Monomial m(nvars, 0);
        m[i] = p;
        s.add_term(m, BigInt(1));
    }
    return s;
}

}  // namespace

TableVariant parse_variant(const std::string& name) {
    if (name == "plain") return TableVariant::plain;
    if (name == "hat") return TableVariant::hat;
    if (name == "extended") return TableVariant::extended;
    if (name == "block2n") return TableVariant::block2n;
    if (name == "toeplitz") return TableVariant::toeplitz;
    throw UsageError("unknown table variant '" + name + "' (plain, hat, extended, block2n, toeplitz)");
}

std::string variant_name(TableVariant v) {
    switch (v) {
        case TableVariant::plain: return "plain";
        case TableVariant::hat: return "hat";
        case TableVariant::extended: return "extended";
        case TableVariant::block2n: return "block2n";
        case TableVariant::toeplitz: return "toeplitz";
    }
    return "?";
}

PermanentAlgorithm parse_permanent_algorithm(const std::string& name) {
    if (name == "leibniz") return PermanentAlgorithm::leibniz;
    if (name == "ryser") return PermanentAlgorithm::ryser;
    throw UsageError("unknown permanent algorithm '" + name + "' (leibniz, ryser)");
}

DeterminantAlgorithm parse_determinant_algorithm(const std::string& name) {
    if (name == "leibniz") return DeterminantAlgorithm::leibniz;
    if (name == "factored") return DeterminantAlgorithm::factored;
    throw UsageError("unknown determinant algorithm '" + name + "' (leibniz, factored)");
}

CayleyMatrix::CayleyMatrix(std::size_t size, std::size_t nvars, std::vector<std::uint32_t> entries,
                           TableVariant variant)
    : size_(size), nvars_(nvars), entries_(std::move(entries)), variant_(variant) {
    if (entries_.size() != size_ * size_) throw UsageError("table entry count does not match its size");
    for (auto v : entries_)
        if (v >= nvars_) throw UsageError("table entry outside x_0..x_{n-1}");
}

nlohmann::json CayleyMatrix::to_json() const {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < size_; ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < size_; ++j) row.push_back(at(i, j));
        rows.push_back(std::move(row));
    }
    return {{"variant", variant_name(variant_)}, {"size", size_}, {"nvars", nvars_}, {"rows", rows}};
}

std::string CayleyMatrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            if (j) out += " ";
            out += "x" + std::to_string(at(i, j));
        }
        out += "\n";
    }
    return out;
}

CayleyMatrix build_relabelled(const FiniteAbelianGroup& g, TableVariant variant, const std::vector<std::size_t>& order) {
    const std::size_t n = g.size();
    if (order.size() != n) throw UsageError("relabelling must list every group element once");
    std::vector<std::size_t> pos(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (order[k] >= n || pos[order[k]] != n) throw UsageError("relabelling is not a permutation");
        pos[order[k]] = k;
    }
    if (variant == TableVariant::toeplitz) throw UsageError("toeplitz tables use the natural order of C_n");
    // Row/column k of the table stands for this group element.
    std::vector<std::size_t> rows;
    switch (variant) {
        case TableVariant::plain:
        case TableVariant::hat: rows = order; break;
        case TableVariant::extended:
            rows = order;
            rows.push_back(0);
            break;
        case TableVariant::block2n:
            rows = order;
            rows.insert(rows.end(), order.begin(), order.end());
            break;
        case TableVariant::toeplitz: break;
    }
    const std::size_t l = rows.size();
    std::vector<std::uint32_t> entries(l * l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            const std::size_t col = variant == TableVariant::hat ? g.neg_index(rows[j]) : rows[j];
            entries[i * l + j] = static_cast<std::uint32_t>(pos[g.add_index(rows[i], col)]);
        }
    return CayleyMatrix(l, n, std::move(entries), variant);
}

CayleyMatrix build(const FiniteAbelianGroup& g, TableVariant variant, std::optional<std::size_t> l) {
    const std::size_t n = g.size();
    if (variant != TableVariant::toeplitz) {
        if (l && *l != (variant == TableVariant::extended ? n + 1 : variant == TableVariant::block2n ? 2 * n : n))
            throw UsageError("size " + std::to_string(*l) + " does not fit the " + variant_name(variant) + " table of " +
                             g.name());
        return build_relabelled(g, variant, identity_order(n));
    }
    if (!g.is_single_cyclic()) throw UsageError("toeplitz tables are defined for cyclic groups C_n only");
    const std::size_t size = l.value_or(n);
    if (size < n) throw UsageError("toeplitz size l must be >= n");
    std::vector<std::uint32_t> entries(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            entries[i * size + j] = static_cast<std::uint32_t>(nt::mod(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i),
                                                                       static_cast<std::int64_t>(n)));
    return CayleyMatrix(size, n, std::move(entries), TableVariant::toeplitz);
}

IntPolynomial permanent(const CayleyMatrix& m, PermanentAlgorithm alg) {
    return alg == PermanentAlgorithm::leibniz ? kernels::permanent_leibniz(m.grid()) : kernels::permanent_ryser(m.grid());
}

std::vector<CycPolynomial> character_linear_forms(const FiniteAbelianGroup& g) {
    const std::size_t n = g.size();
    const std::int64_t e = g.exponent();
    std::vector<CycPolynomial> forms;
    forms.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Character chi = g.character(j);
        CycPolynomial v(n);
        for (std::size_t i = 0; i < n; ++i)
            v += CycPolynomial::variable(n, i, CyclotomicInt::root_power(e, g.char_eval_exponent(chi, g.element(i))));
        forms.push_back(std::move(v));
    }
    return forms;
}

IntPolynomial determinant(const FiniteAbelianGroup& g, const CayleyMatrix& m, DeterminantAlgorithm alg) {
    if (m.nvars() != g.size()) throw UsageError("table does not belong to " + g.name());
    if (m.variant() == TableVariant::extended || m.variant() == TableVariant::block2n) return IntPolynomial(m.nvars());
    if (alg == DeterminantAlgorithm::leibniz) return kernels::determinant_leibniz(m.grid());

    const bool square_cayley = m.variant() == TableVariant::plain || m.variant() == TableVariant::hat ||
                               (m.variant() == TableVariant::toeplitz && m.size() == g.size());
    if (!square_cayley) throw UsageError("factored determinant needs a plain or hat table");
    check_guard("factored_order", g.order(), kFactoredMaxOrder);
    const std::size_t n = g.size();
    CycPolynomial prod(n);
    Monomial one(n, 0);
    prod.add_term(one, CyclotomicInt(g.exponent(), BigInt(1)));
    for (auto& v : character_linear_forms(g)) prod = prod * v;
    IntPolynomial det = to_integer_polynomial(prod);
    // det(M_G) = sign(pi_0) prod v_j; the hat table (and its transpose, the
    // square toeplitz table) permutes columns by pi_0, cancelling the sign.
    if (m.variant() == TableVariant::plain && inversion_permutation_sign(g) < 0) det = -det;
    if (m.variant() == TableVariant::plain) {
        bool natural = true;
        const auto ref = build(g, TableVariant::plain);
        natural = ref.entries() == m.entries();
        if (!natural) throw UsageError("factored determinant needs the table in natural element order");
    }
    return det;
}

std::vector<Monomial> hall_support(const FiniteAbelianGroup& g, std::size_t degree) {
    const std::size_t n = g.size();
    const BigInt count = nt::binomial(static_cast<std::int64_t>(n + degree) - 1, static_cast<std::int64_t>(degree));
    check_guard("support_enumeration", count.fits_slong_p() ? count.get_si() : INT64_MAX, kSupportLimit);
    std::vector<Monomial> out;
    Monomial m(n, 0);
    // k_i chosen for i = 0..n-1 in turn; `sum` is the running group element.
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left,
                                                                       std::size_t sum) {
        if (i == n - 1) {
            std::size_t s = sum;
            for (std::size_t k = 0; k < left; ++k) s = g.add_index(s, i);
            if (s == 0) {
                m[i] = static_cast<std::uint32_t>(left);
                out.push_back(m);
                m[i] = 0;
            }
            return;
        }
        std::size_t s = sum;
        for (std::size_t k = 0; k <= left; ++k) {
            m[i] = static_cast<std::uint32_t>(k);
            rec(i + 1, left - k, s);
            s = g.add_index(s, i);
        }
        m[i] = 0;
    };
    rec(0, degree, 0);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

BigInt p_count(const FiniteAbelianGroup& g) {
    const auto support = hall_support(g, g.size());
    if (g.size() <= 7) {
        const auto per = permanent(build(g, TableVariant::plain), PermanentAlgorithm::ryser);
        if (per.size() != support.size())
            throw InternalError("p_count: permanent has " + std::to_string(per.size()) + " monomials, hall_support " +
                                std::to_string(support.size()));
    }
    return BigInt(static_cast<unsigned long>(support.size()));
}

BigInt d_count(const FiniteAbelianGroup& g) {
    const auto alg = g.size() <= kernels::kLeibnizMaxSize ? DeterminantAlgorithm::leibniz : DeterminantAlgorithm::factored;
    return BigInt(static_cast<unsigned long>(determinant(g, build(g, TableVariant::plain), alg).size()));
}

Character dual_sum_character(const FiniteAbelianGroup& g) {
    Character psi{std::vector<std::int64_t>(g.factors().size(), 0)};
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto chi = g.character(k);
        for (std::size_t j = 0; j < psi.residues.size(); ++j)
            psi.residues[j] = (psi.residues[j] + chi.residues[j]) % g.factors()[j];
    }
    return psi;
}

Report check_hall(const FiniteAbelianGroup& g, bool include_extended) {
    Report r;
    r.check = "hall";
    r.parameters = {{"group", g.name()}, {"extended", include_extended}};
    ReportTimer timer(r);
    const std::size_t n = g.size();
    auto compare = [&](TableVariant v, std::size_t degree) {
        const auto per = permanent(build(g, v), PermanentAlgorithm::ryser);
        const auto lit = sorted_support(per);
        const auto hall = hall_support(g, degree);
        auto [only_per, only_hall] = symmetric_difference(lit, hall);
        r.details[variant_name(v)] = {{"degree", degree}, {"monomials", lit.size()}, {"hall_support", hall.size()}};
        if (!only_per.empty() || !only_hall.empty())
            r.failures.push_back({{"variant", variant_name(v)},
                                  {"in_permanent_only", monomial_list(only_per)},
                                  {"in_hall_support_only", monomial_list(only_hall)}});
    };
    compare(TableVariant::plain, n);
    if (include_extended) compare(TableVariant::extended, n + 1);
    return r;
}

Report check_invariance(const FiniteAbelianGroup& g) {
    Report r;
    r.check = "invariance";
    r.parameters = {{"group", g.name()}};
    ReportTimer timer(r);
    const std::size_t n = g.size();
    const auto plain = build(g, TableVariant::plain);
    const auto hat = build(g, TableVariant::hat);
    const auto per = permanent(plain, PermanentAlgorithm::ryser);
    const Character psi = dual_sum_character(g);
    const int sign0 = inversion_permutation_sign(g);

    std::optional<IntPolynomial> det;
    if (n <= kernels::kLeibnizMaxSize) {
        det = determinant(g, plain, DeterminantAlgorithm::leibniz);
        if (n <= kFactoredMaxOrder) {
            const auto factored = determinant(g, plain, DeterminantAlgorithm::factored);
            if (factored != *det)
                r.failures.push_back({{"property", "det_leibniz_equals_factored"}, {"leibniz", to_string(*det)},
                                      {"factored", to_string(factored)}});
        }
        const auto det_hat = determinant(g, hat, DeterminantAlgorithm::leibniz);
        const IntPolynomial expected_hat = sign0 < 0 ? -*det : *det;
        if (det_hat != expected_hat)
            r.failures.push_back({{"property", "det_hat_is_signed_det"}, {"det_hat", to_string(det_hat)}});
    } else if (n <= kFactoredMaxOrder) {
        det = determinant(g, plain, DeterminantAlgorithm::factored);
    }
    if (n + 1 <= kernels::kLeibnizMaxSize) {
        // Computed, not short-circuited: the repeated column must cancel everything.
        const auto det_ext = kernels::determinant_leibniz(build(g, TableVariant::extended).grid());
        if (!det_ext.is_zero())
            r.failures.push_back({{"property", "det_extended_is_zero"}, {"det", to_string(det_ext)}});
    }
    const auto per_hat = permanent(hat, PermanentAlgorithm::ryser);
    if (per_hat != per) r.failures.push_back({{"property", "per_hat_equals_per"}});
    if (coefficient_sum(per) != nt::factorial(static_cast<std::int64_t>(n)))
        r.failures.push_back({{"property", "per_coefficient_sum_is_n_factorial"}, {"sum", coefficient_sum(per).get_str()}});

    bool psi_trivial = true;
    for (std::size_t gi = 0; gi < n; ++gi) {
        const auto gamma = g.element(gi);
        if (apply_group_action(g, gamma, per) != per)
            r.failures.push_back({{"property", "per_invariant"}, {"gamma", gamma.residues}});
        const int w = psi_value(g, psi, gi);
        if (w < 0) psi_trivial = false;
        if (det) {
            const auto moved = apply_group_action(g, gamma, *det);
            if (moved != (w < 0 ? -*det : *det))
                r.failures.push_back({{"property", "det_semi_invariant"}, {"gamma", gamma.residues}, {"psi", w}});
        }
    }
    r.details = {{"psi", psi.residues},
                 {"psi_trivial", psi_trivial},
                 {"inversion_sign", sign0},
                 {"per_monomials", per.size()},
                 {"det_checked", det.has_value()}};
    if (det) r.details["det_monomials"] = det->size();
    return r;
}

Report check_action_identities(const FiniteAbelianGroup& g, std::size_t sample, std::uint64_t seed) {
    Report r;
    r.check = "actions";
    r.parameters = {{"group", g.name()}, {"sample", sample}, {"seed", seed}};
    ReportTimer timer(r);
    const std::size_t n = g.size();

    std::vector<std::vector<std::size_t>> perms;
    if (sample == 0) {
        check_guard("exhaustive_permutations", static_cast<std::int64_t>(n), 8);
        auto p = identity_order(n);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    } else {
        std::mt19937_64 rng(seed);
        auto p = identity_order(n);
        for (std::size_t k = 0; k < sample; ++k) {
            std::shuffle(p.begin(), p.end(), rng);
            perms.push_back(p);
        }
    }

    std::vector<std::vector<std::size_t>> sigma(n, std::vector<std::size_t>(n)), sigma_inv = sigma;
    for (std::size_t gi = 0; gi < n; ++gi)
        for (std::size_t i = 0; i < n; ++i) {
            sigma[gi][i] = g.add_index(i, gi);
            sigma_inv[gi][g.add_index(i, gi)] = i;
        }

    // Search for sigma with sigma(i) = j and x(sigma) = target.
    auto realize = [&](const Monomial& target, std::size_t i, std::size_t j) {
        Monomial left = target;
        std::vector<bool> used(n, false);
        auto take = [&](std::size_t row, std::size_t col) {
            auto& k = left[g.add_index(row, col)];
            if (k == 0) return false;
            --k;
            used[col] = true;
            return true;
        };
        auto give = [&](std::size_t row, std::size_t col) {
            ++left[g.add_index(row, col)];
            used[col] = false;
        };
        if (!take(i, j)) return false;
        std::function<bool(std::size_t)> rec = [&](std::size_t row) {
            if (row == n) return true;
            if (row == i) return rec(row + 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (used[c] || !take(row, c)) continue;
                if (rec(row + 1)) return true;
                give(row, c);
            }
            return false;
        };
        return rec(0);
    };

    std::set<Monomial> realized;
    std::int64_t checks = 0, searches = 0;
    auto fail = [&](const char* property, const std::vector<std::size_t>& pi, std::size_t gi) {
        if (r.failures.size() < 50)
            r.failures.push_back({{"property", property}, {"pi", pi}, {"gamma", g.element(gi).residues}});
    };
    std::vector<std::size_t> tmp(n), inv(n);
    for (const auto& pi : perms) {
        const Monomial x = permutation_monomial(g, pi);
        const int sign = permutation_sign(pi);
        for (std::size_t i = 0; i < n; ++i) inv[pi[i]] = i;
        ++checks;
        if (permutation_monomial(g, inv) != x) fail("x_pi_equals_x_pi_inverse", pi, 0);
        for (std::size_t gi = 0; gi < n; ++gi) {
            // gamma * pi = sigma_gamma pi sigma_gamma
            for (std::size_t i = 0; i < n; ++i) tmp[i] = sigma[gi][pi[sigma[gi][i]]];
            if (gi == 0 && tmp != pi) fail("neutral_acts_trivially", pi, gi);
            if (permutation_sign(tmp) != sign) fail("star_action_preserves_sign", pi, gi);
            if (permutation_monomial(g, tmp) != x) fail("star_action_preserves_monomial", pi, gi);
            // gamma . x(pi) = x(pi sigma_gamma^{-1})
            Monomial moved(n, 0);
            for (std::size_t v = 0; v < n; ++v) moved[g.add_index(v, gi)] = x[v];
            for (std::size_t i = 0; i < n; ++i) tmp[i] = pi[sigma_inv[gi][i]];
            if (permutation_monomial(g, tmp) != moved) fail("variable_action_identity", pi, gi);
            checks += 4;
        }
        if (!realized.insert(x).second) continue;
        // Every factor x_k = x_i + x_j of x(pi) can be put at position (i, j).
        for (std::size_t k = 0; k < n; ++k) {
            if (x[k] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t j = g.add_index(k, g.neg_index(i));
                ++searches;
                if (!realize(x, i, j) && r.failures.size() < 50)
                    r.failures.push_back({{"property", "repositioning"}, {"monomial", x}, {"i", i}, {"j", j}});
            }
        }
    }
    r.details = {{"permutations", perms.size()},
                 {"identity_checks", checks},
                 {"distinct_monomials", realized.size()},
                 {"repositioning_searches", searches}};
    return r;
}

Report lehmer_check(std::int64_t p) {
    if (p != 3 && p != 5 && p != 7) throw UsageError("lehmer_check supports p in {3, 5, 7}");
    Report r;
    r.check = "lehmer";
    r.parameters = {{"p", p}};
    ReportTimer timer(r);
    const FiniteAbelianGroup g({p});
    const auto table = build(g, TableVariant::plain);
    const auto sums = power_sum(g.size(), static_cast<std::uint32_t>(p));
    const BigInt bp(static_cast<long>(p));
    // The Hankel-form table x_{i+j} differs from the Toeplitz form x_{j-i} by
    // the inversion permutation, whose sign is (-1)^((p-1)/2).
    const int sign0 = inversion_permutation_sign(g);
    auto verify = [&](const char* which, const IntPolynomial& poly, int lead) {
        const auto rest = poly - (lead < 0 ? -sums : sums);
        std::size_t bad = 0;
        for (auto& [m, c] : rest.terms())
            if (!mpz_divisible_p(c.get_mpz_t(), bp.get_mpz_t())) {
                ++bad;
                if (r.failures.size() < 50)
                    r.failures.push_back({{"polynomial", which}, {"monomial", m}, {"coeff", c.get_str()}});
            }
        r.details[which] = {{"terms", poly.size()}, {"power_sum_sign", lead}, {"non_divisible", bad}};
    };
    verify("det_toeplitz", determinant(g, build(g, TableVariant::hat), DeterminantAlgorithm::leibniz), 1);
    verify("det", determinant(g, table, DeterminantAlgorithm::leibniz), sign0);
    verify("per", permanent(table, PermanentAlgorithm::ryser), 1);
    return r;
}

Report check_block_and_extended_counts(const FiniteAbelianGroup& g) {
    Report r;
    r.check = "extended";
    r.parameters = {{"group", g.name()}};
    ReportTimer timer(r);
    const std::size_t n = g.size();
    const auto series = molien::sym_series(g, 0, static_cast<int>(2 * n));
    auto compare = [&](TableVariant v, std::size_t degree) {
        const auto per = permanent(build(g, v), PermanentAlgorithm::ryser);
        const Rational expected = series[static_cast<int>(degree)];
        r.details[variant_name(v)] = {{"degree", degree}, {"monomials", per.size()}, {"series_coefficient", to_string(expected)}};
        if (Rational(static_cast<unsigned long>(per.size())) != expected)
            r.failures.push_back({{"variant", variant_name(v)}, {"monomials", per.size()}, {"expected", to_string(expected)}});
    };
    compare(TableVariant::extended, n + 1);
    try {
        compare(TableVariant::block2n, 2 * n);
    } catch (const GuardError& e) {
        r.details["block2n"] = {{"skipped", e.what()}};
    }
    return r;
}

Report check_conjecture(std::int64_t n, std::int64_t l) {
    if (n < 1 || l < n) throw UsageError("check_conjecture needs 1 <= n <= l");
    Report r;
    r.check = "conjecture";
    r.parameters = {{"n", n}, {"l", l}};
    ReportTimer timer(r);
    const FiniteAbelianGroup g({n});
    const auto per = permanent(build(g, TableVariant::toeplitz, static_cast<std::size_t>(l)), PermanentAlgorithm::ryser);
    const auto support = sorted_support(per);
    // Condition: sum lambda_i = l and sum j lambda_j = 0 mod n, which for C_n
    // is the zero-sum condition on exponent vectors.
    const auto expected = hall_support(g, static_cast<std::size_t>(l));
    const BigInt count = molien::a_coeff(n, l, 0);
    auto [only_per, only_expected] = symmetric_difference(support, expected);
    r.details = {{"monomials", support.size()}, {"condition_count", expected.size()}, {"a_coeff", count.get_str()}};
    if (!only_per.empty() || !only_expected.empty())
        r.failures.push_back({{"property", "support"},
                              {"in_permanent_only", monomial_list(only_per)},
                              {"satisfying_condition_only", monomial_list(only_expected)}});
    if (BigInt(static_cast<unsigned long>(support.size())) != count)
        r.failures.push_back({{"property", "count"}, {"monomials", support.size()}, {"a_coeff", count.get_str()}});
    return r;
}

}  // namespace regrep::cayley
