#include "regrep/groups.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "regrep/errors.hpp"
#include "regrep/numtheory.hpp"

namespace regrep {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw UsageError("group needs at least one cyclic factor");
    for (auto f : factors_) {
        if (f < 1) throw UsageError("cyclic factor must be >= 1, got " + std::to_string(f));
        order_ *= f;
        exponent_ = nt::lcm(exponent_, f);
        if (order_ > (1 << 20)) throw GuardError("group_order", 1 << 20, order_);
    }
    const std::size_t n = size();
    add_table_.resize(n * n);
    neg_table_.resize(n);
    order_table_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = element(i);
        neg_table_[i] = index_of(neg(a));
        order_table_[i] = element_order(a);
        for (std::size_t j = 0; j < n; ++j) add_table_[i * n + j] = index_of(add(a, element(j)));
    }
}

std::string FiniteAbelianGroup::name() const {
    std::string s;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (j) s += "x";
        s += "C" + std::to_string(factors_[j]);
    }
    return s;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
    return out;
}

GroupElement FiniteAbelianGroup::element(std::size_t index) const {
    if (index >= size()) throw UsageError("element index out of range");
    GroupElement a;
    a.residues.resize(factors_.size());
    for (std::size_t j = factors_.size(); j-- > 0;) {
        a.residues[j] = static_cast<std::int64_t>(index % static_cast<std::size_t>(factors_[j]));
        index /= static_cast<std::size_t>(factors_[j]);
    }
    return a;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& a) const {
    check_member(a);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        idx = idx * static_cast<std::size_t>(factors_[j]) + static_cast<std::size_t>(a.residues[j]);
    return idx;
}

void FiniteAbelianGroup::check_member(const GroupElement& a) const {
    if (a.residues.size() != factors_.size()) throw UsageError("element does not belong to " + name());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        if (a.residues[j] < 0 || a.residues[j] >= factors_[j])
            throw UsageError("element residue out of range for " + name());
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_member(a);
    check_member(b);
    GroupElement c;
    c.residues.resize(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        c.residues[j] = (a.residues[j] + b.residues[j]) % factors_[j];
    return c;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    check_member(a);
    GroupElement c;
    c.residues.resize(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        c.residues[j] = (factors_[j] - a.residues[j]) % factors_[j];
    return c;
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& a) const {
    check_member(a);
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        ord = nt::lcm(ord, factors_[j] / nt::gcd(a.residues[j], factors_[j]));
    return ord;
}

Character FiniteAbelianGroup::character(std::size_t index) const { return Character{element(index).residues}; }

std::int64_t FiniteAbelianGroup::char_eval_exponent(const Character& chi, const GroupElement& a) const {
    check_member(a);
    check_member(GroupElement{chi.residues});
    std::int64_t t = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        t = (t + chi.residues[j] * a.residues[j] % exponent_ * (exponent_ / factors_[j])) % exponent_;
    return t;
}

std::int64_t FiniteAbelianGroup::char_eval_exponent(std::size_t chi_index, std::size_t a_index) const {
    return char_eval_exponent(character(chi_index), element(a_index));
}

FiniteAbelianGroup parse_group(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto fail = [&](const std::string& why) {
        return UsageError("malformed group spec '" + std::string(spec) + "': " + why);
    };
    std::vector<std::int64_t> factors;
    std::size_t pos = 0;
    while (true) {
        if (pos >= s.size() || s[pos] != 'c') throw fail("expected 'C'");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw fail("expected cyclic order after 'C'");
        if (pos - start > 9) throw fail("cyclic order too large");
        const auto f = std::stoll(s.substr(start, pos - start));
        if (f == 0) throw fail("cyclic factor of order 0");
        factors.push_back(f);
        if (pos == s.size()) break;
        if (s[pos] != 'x') throw fail("expected 'x' between factors");
        ++pos;
    }
    return FiniteAbelianGroup(std::move(factors));
}

OrderProfile order_profile(const FiniteAbelianGroup& g) {
    OrderProfile p;
    for (std::size_t i = 0; i < g.size(); ++i) ++p[g.order_of_index(i)];
    return p;
}

OrderProfile parse_order_profile(const nlohmann::json& j) {
    if (!j.is_object() || j.empty()) throw UsageError("order profile must be a non-empty JSON object");
    OrderProfile p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::int64_t d = 0;
        try {
            std::size_t used = 0;
            d = std::stoll(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw UsageError("order profile key '" + it.key() + "' is not an integer");
        }
        if (d < 1) throw UsageError("order profile key must be >= 1");
        if (!it.value().is_number_integer() || it.value().get<std::int64_t>() < 0)
            throw UsageError("order profile count for " + it.key() + " must be a non-negative integer");
        const auto c = it.value().get<std::int64_t>();
        if (c > 0) p[d] = c;
    }
    if (p.empty()) throw UsageError("order profile has no elements");
    return p;
}

std::int64_t profile_group_order(const OrderProfile& profile) {
    std::int64_t n = 0;
    for (auto [d, c] : profile) n += c;
    return n;
}

int inversion_permutation_sign(const FiniteAbelianGroup& g) {
    // Sign from the cycle structure: an involution contributes one
    // transposition per 2-cycle.
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.neg_index(i) > i) ++transpositions;
    return transpositions % 2 == 0 ? 1 : -1;
}

BigInt subset_sum_zero_count(const FiniteAbelianGroup& g) {
    check_guard("subset_sum_order", g.order(), 24);
    const std::size_t n = g.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    // Gray-code walk: one element toggles per step.
    std::vector<std::uint8_t> in(n, 0);
    std::size_t sum = 0;
    std::uint64_t count = 1;  // empty set
    for (std::uint64_t k = 1; k < total; ++k) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(k));
        sum = in[bit] ? g.add_index(sum, g.neg_index(bit)) : g.add_index(sum, bit);
        in[bit] ^= 1;
        if (sum == 0) ++count;
    }
    return BigInt(static_cast<unsigned long>(count));
}

namespace {

void invariant_factor_lists(std::int64_t remaining, std::int64_t last,
                            std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
    if (remaining == 1) {
        out.push_back(cur);
        return;
    }
    // Next factor is a multiple of `last` dividing what is left.
    for (auto d : nt::divisors(remaining)) {
        if (d == 1 || d % last != 0) continue;
        cur.push_back(d);
        invariant_factor_lists(remaining / d, d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t n) {
    if (n < 1) throw UsageError("group order must be >= 1");
    if (n == 1) return {FiniteAbelianGroup({1})};
    std::vector<std::vector<std::int64_t>> lists;
    std::vector<std::int64_t> cur;
    invariant_factor_lists(n, 1, cur, lists);
    std::vector<FiniteAbelianGroup> out;
    for (auto& f : lists) out.emplace_back(f);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.factors().size() < b.factors().size();
    });
    return out;
}

std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::int64_t max_order) {
    std::vector<FiniteAbelianGroup> out;
    for (std::int64_t n = 1; n <= max_order; ++n)
        for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
    return out;
}

}  // namespace regrep
