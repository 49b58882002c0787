#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "regrep/errors.hpp"
#include "regrep/kernels.hpp"

using namespace regrep;

namespace {

std::vector<std::uint32_t> random_entries(std::size_t l, std::size_t nvars, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(nvars - 1));
    std::vector<std::uint32_t> e(l * l);
    for (auto& v : e) v = pick(rng);
    return e;
}

}  // namespace

TEST_CASE("kernels agree with the naive expansion on random grids") {
    std::mt19937 rng(20240917);
    for (std::size_t l = 1; l <= 7; ++l)
        for (std::size_t nvars = 1; nvars <= 5; ++nvars)
            for (int rep = 0; rep < 3; ++rep) {
                const auto e = random_entries(l, nvars, rng);
                const kernels::VariableGrid grid{l, nvars, e};
                const auto per = oracle::expand(grid, false);
                const auto det = oracle::expand(grid, true);
                CHECK(oracle::to_oracle_poly(kernels::permanent_leibniz(grid)) == per);
                CHECK(oracle::to_oracle_poly(kernels::permanent_ryser(grid)) == per);
                CHECK(oracle::to_oracle_poly(kernels::serial::permanent_leibniz(grid)) == per);
                CHECK(oracle::to_oracle_poly(kernels::serial::permanent_ryser(grid)) == per);
                CHECK(oracle::to_oracle_poly(kernels::determinant_leibniz(grid)) == det);
                CHECK(oracle::to_oracle_poly(kernels::serial::determinant_leibniz(grid)) == det);
            }
}

TEST_CASE("serial and parallel kernels agree at larger sizes") {
    std::mt19937 rng(7);
    for (std::size_t l : {8, 9}) {
        const auto e = random_entries(l, 4, rng);
        const kernels::VariableGrid grid{l, 4, e};
        CHECK(kernels::permanent_leibniz(grid) == kernels::serial::permanent_leibniz(grid));
        CHECK(kernels::permanent_ryser(grid) == kernels::serial::permanent_ryser(grid));
        CHECK(kernels::determinant_leibniz(grid) == kernels::serial::determinant_leibniz(grid));
    }
    const auto e = random_entries(12, 3, rng);
    const kernels::VariableGrid grid{12, 3, e};
    CHECK(kernels::permanent_ryser(grid) == kernels::serial::permanent_ryser(grid));
}

TEST_CASE("thread cap does not change results") {
    std::mt19937 rng(99);
    const auto e = random_entries(8, 5, rng);
    const kernels::VariableGrid grid{8, 5, e};
    const auto ref = kernels::serial::permanent_ryser(grid);
    for (int t : {1, 2, 3}) {
        kernels::set_max_threads(t);
        CHECK(kernels::permanent_ryser(grid) == ref);
        CHECK(kernels::permanent_leibniz(grid) == ref);
    }
    kernels::set_max_threads(0);
}

TEST_CASE("size guards") {
    std::vector<std::uint32_t> e(100, 0);
    const kernels::VariableGrid grid{10, 1, e};
    CHECK_THROWS_AS(kernels::permanent_leibniz(grid), GuardError);
    CHECK_THROWS_AS(kernels::determinant_leibniz(grid), GuardError);
    // all-equal entries: per = l! x0^l
    CHECK(to_string(kernels::permanent_ryser(grid)) == "3628800*x0^10");
    std::vector<std::uint32_t> big(17 * 17, 0);
    CHECK_THROWS_AS(kernels::permanent_ryser(kernels::VariableGrid{17, 1, big}), GuardError);
}

TEST_CASE("empty matrix") {
    std::vector<std::uint32_t> e;
    const kernels::VariableGrid grid{0, 2, e};
    CHECK_THROWS_AS(kernels::permanent_ryser(grid), UsageError);
    CHECK_THROWS_AS(kernels::determinant_leibniz(grid), UsageError);
}
