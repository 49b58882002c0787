#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "regrep/errors.hpp"
#include "regrep/groups.hpp"

using namespace regrep;

TEST_CASE("parse_group accepts the C<n>xC<m> grammar") {
    const auto g = parse_group("C2xC4");
    CHECK(g.factors() == std::vector<std::int64_t>{2, 4});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.name() == "C2xC4");
    CHECK(parse_group(" c3 X c5 ").name() == "C3xC5");
    CHECK(parse_group("C3").is_single_cyclic());
    CHECK_THROWS_AS(parse_group("C0"), UsageError);
    CHECK_THROWS_AS(parse_group("D4"), UsageError);
    CHECK_THROWS_AS(parse_group("C2x"), UsageError);
    CHECK_THROWS_AS(parse_group(""), UsageError);
}

TEST_CASE("element indexing is lexicographic with the last factor fastest") {
    const auto g = parse_group("C2xC3");
    CHECK(g.element(0).residues == std::vector<std::int64_t>{0, 0});
    CHECK(g.element(1).residues == std::vector<std::int64_t>{0, 1});
    CHECK(g.element(3).residues == std::vector<std::int64_t>{1, 0});
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(g.index_of(g.element(k)) == k);
}

TEST_CASE("group axioms hold for the index tables") {
    for (auto& g : abelian_groups_up_to(12)) {
        const std::size_t n = g.size();
        for (std::size_t a = 0; a < n; ++a) {
            CHECK(g.add_index(a, 0) == a);
            CHECK(g.add_index(a, g.neg_index(a)) == 0);
            for (std::size_t b = 0; b < n; ++b) {
                CHECK(g.add_index(a, b) == g.add_index(b, a));
                for (std::size_t c = 0; c < n; c += 3)
                    CHECK(g.add_index(g.add_index(a, b), c) == g.add_index(a, g.add_index(b, c)));
            }
        }
    }
}

TEST_CASE("characters are homomorphisms into Z/e") {
    for (auto& g : abelian_groups_up_to(12)) {
        const auto e = g.exponent();
        for (std::size_t k = 0; k < g.size(); ++k)
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b)
                    CHECK((g.char_eval_exponent(k, a) + g.char_eval_exponent(k, b)) % e ==
                          g.char_eval_exponent(k, g.add_index(a, b)));
        // distinct characters
        std::set<std::vector<std::int64_t>> seen;
        for (std::size_t k = 0; k < g.size(); ++k) {
            std::vector<std::int64_t> row;
            for (std::size_t a = 0; a < g.size(); ++a) row.push_back(g.char_eval_exponent(k, a));
            seen.insert(row);
        }
        CHECK(seen.size() == g.size());
    }
}

TEST_CASE("order profiles") {
    const auto p = order_profile(parse_group("C6"));
    CHECK(p == OrderProfile{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
    const auto q = order_profile(parse_group("C2xC2"));
    CHECK(q == OrderProfile{{1, 1}, {2, 3}});
    const auto s3 = parse_order_profile(nlohmann::json::parse(R"({"1":1,"2":3,"3":2})"));
    CHECK(profile_group_order(s3) == 6);
    // arbitrary profiles are accepted; malformed ones are not
    CHECK(profile_group_order(parse_order_profile(nlohmann::json::parse(R"({"2":3})"))) == 3);
    CHECK_THROWS_AS(parse_order_profile(nlohmann::json::parse(R"({"x":1})")), UsageError);
    CHECK_THROWS_AS(parse_order_profile(nlohmann::json::parse(R"({"2":-1})")), UsageError);
    for (std::int64_t n = 1; n <= 30; ++n)
        for (auto [d, c] : order_profile(parse_group("C" + std::to_string(n)))) CHECK(c == oracle::phi(d));
}

TEST_CASE("abelian groups of a given order") {
    CHECK(abelian_groups_of_order(1).size() == 1);
    CHECK(abelian_groups_of_order(8).size() == 3);
    CHECK(abelian_groups_of_order(16).size() == 5);
    CHECK(abelian_groups_of_order(12).size() == 2);
    CHECK(abelian_groups_of_order(36).size() == 4);
    CHECK(abelian_groups_of_order(8).front().name() == "C8");
    std::size_t total = 0;
    for (auto& g : abelian_groups_up_to(16)) {
        total += 1;
        CHECK(g.order() <= 16);
    }
    CHECK(total == 25);
}

TEST_CASE("zero-sum subsets agree with enumeration") {
    CHECK(subset_sum_zero_count(parse_group("C2xC2")) == 4);
    CHECK(subset_sum_zero_count(parse_group("C3")) == 4);
    for (auto& g : abelian_groups_up_to(14)) CHECK(subset_sum_zero_count(g) == oracle::zero_sum_subsets(g));
}

TEST_CASE("inversion permutation sign") {
    // n odd: pairs {a, -a} number (n - 1) / 2
    CHECK(inversion_permutation_sign(parse_group("C3")) == -1);
    CHECK(inversion_permutation_sign(parse_group("C5")) == 1);
    CHECK(inversion_permutation_sign(parse_group("C2xC2")) == 1);
    CHECK(inversion_permutation_sign(parse_group("C4")) == -1);
}
