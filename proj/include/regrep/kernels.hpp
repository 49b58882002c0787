#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "regrep/polynomial.hpp"

namespace regrep::kernels {

/// Square l x l matrix whose entries are variable indices into x_0..x_{n-1}.
struct VariableGrid {
    std::size_t size = 0;
    std::size_t nvars = 0;
    std::span<const std::uint32_t> entries;  // row-major

    std::uint32_t at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

inline constexpr std::size_t kLeibnizMaxSize = 9;
inline constexpr std::size_t kRyserMaxSize = 16;
// Monomials of degree <= l in n variables held by the dense kernels.
inline constexpr std::int64_t kDenseMonomialLimit = 4'000'000;
// Estimated inner-loop operations for one Ryser evaluation.
inline constexpr std::int64_t kRyserWorkLimit = 20'000'000'000;

// Straightforward single-threaded versions kept as the reference the parallel
// kernels are tested against: permutation enumeration with
// std::next_permutation and plain subset loops over sparse polynomials.
namespace serial {
IntPolynomial permanent_leibniz(const VariableGrid& m);
IntPolynomial permanent_ryser(const VariableGrid& m);
IntPolynomial determinant_leibniz(const VariableGrid& m);
}  // namespace serial

// OpenMP kernels over a dense monomial index. Leibniz splits on the columns
// chosen by the first two rows; Ryser walks Gray-code blocks of column
// subsets. Integer accumulation makes the result schedule-independent.
IntPolynomial permanent_leibniz(const VariableGrid& m);
IntPolynomial permanent_ryser(const VariableGrid& m);
IntPolynomial determinant_leibniz(const VariableGrid& m);

/// Caps the worker count used by the OpenMP kernels (k <= 0 restores default).
void set_max_threads(int k);
int max_threads();

}  // namespace regrep::kernels
