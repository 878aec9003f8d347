#pragma once

#include "coneindex/rational.hpp"

namespace coneindex {

// Row rank over the rationals, exact.
Index rank(const RationalMatrix& m);

// Basis of ker(m) as columns; returns an m.cols() x 0 matrix for trivial kernel.
RationalMatrix nullspace(const RationalMatrix& m);

// Basis of the orthogonal complement of the column span of `basis` in R^n
// (n = basis.rows()), w.r.t. the standard inner product. Throws if the input
// columns are dependent. A n x 0 input yields the identity basis of R^n.
RationalMatrix orthogonal_complement(const RationalMatrix& basis);

// Maximal independent subset of columns, in order of appearance.
RationalMatrix column_space_basis(const RationalMatrix& m);

bool same_column_span(const RationalMatrix& a, const RationalMatrix& b);

bool in_column_span(const RationalMatrix& basis, const RationalVector& x);

// Orthogonal projection of x onto the column span of `basis` (independent
// columns), exact over the rationals.
RationalVector project_onto_span(const RationalMatrix& basis, const RationalVector& x);

// Columns of `vectors` glued into a matrix (each of size dim).
RationalMatrix columns(Index dim, const std::vector<RationalVector>& vectors);

}  // namespace coneindex
