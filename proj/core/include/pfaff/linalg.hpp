#pragma once

#include "pfaff/matrix.hpp"

#include <cstdint>
#include <vector>

namespace pfaff {

/// Outcome of fraction-free Gauss-Jordan elimination.
///
/// After elimination every pivot row k has the common value `determinant` in
/// its pivot column `pivot_columns[k]` and zeros in the other pivot columns.
/// `pivots` lists the pivot chosen at each step; over polynomials these are
/// the minors whose vanishing signals a rank drop.
template <class T>
struct Elimination {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_columns;
    std::vector<T> pivots;
    std::size_t rank() const { return pivot_columns.size(); }
};

Elimination<Rational> eliminate(RationalMatrix m);
Elimination<Polynomial> eliminate(PolynomialMatrix m);

/// Right kernel over the rationals. Vectors are normalised to carry a 1 in
/// their free column, ordered by free column.
std::vector<Vector> nullspace(const RationalMatrix& m);
/// Right kernel over the rational-function field, returned with polynomial
/// entries whose common rational content and monomial factor are removed.
std::vector<std::vector<Polynomial>> nullspace(const PolynomialMatrix& m);
std::vector<std::vector<Polynomial>> nullspace(const FunctionMatrix& m);

std::size_t rank_of(const RationalMatrix& m);
/// Generic rank: rank on the dense open set where no pivot vanishes.
std::size_t rank_of(const PolynomialMatrix& m);
std::size_t rank_of(const FunctionMatrix& m);

/// Clears row denominators so the kernel can be computed fraction-free.
PolynomialMatrix clear_denominators(const FunctionMatrix& m);

RationalMatrix evaluate(const PolynomialMatrix& m, std::span<const Rational> point);
RationalMatrix transpose(const RationalMatrix& m);
Vector multiply(const RationalMatrix& m, const Vector& v);

/// Basis of the span of `vectors`, reduced to row echelon form (deterministic).
std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t dim);
/// True when `v` lies in the span of `basis`.
bool in_span(const std::vector<Vector>& basis, const Vector& v);
/// Rank of a list of vectors of length `dim`.
std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim);

/// When enabled, every nullspace call checks m*v = 0 for each returned vector
/// and rank + nullity = columns, throwing InternalError on failure.
void set_invariant_checks(bool enabled);
bool invariant_checks_enabled();
/// Number of nullspace calls verified since start-up.
std::uint64_t verified_nullspace_calls();

} // namespace pfaff
