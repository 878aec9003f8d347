#include "coneindex/linalg.hpp"

#include <stdexcept>

namespace coneindex {

namespace {

Eigen::FullPivLU<RationalMatrix> exact_lu(const RationalMatrix& m) {
  Eigen::FullPivLU<RationalMatrix> lu(m);
  lu.setThreshold(Rational(0));  // only exact zeros count as zero pivots
  return lu;
}

}  // namespace

Index rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return exact_lu(m).rank();
}

RationalMatrix nullspace(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    return RationalMatrix::Identity(m.cols(), m.cols());
  }
  auto lu = exact_lu(m);
  if (lu.dimensionOfKernel() == 0) return RationalMatrix(m.cols(), 0);
  return lu.kernel();
}

RationalMatrix orthogonal_complement(const RationalMatrix& basis) {
  const Index n = basis.rows();
  if (basis.cols() == 0) return RationalMatrix::Identity(n, n);
  if (rank(basis) != basis.cols())
    throw std::invalid_argument("orthogonal_complement: dependent input columns");
  return nullspace(RationalMatrix(basis.transpose()));
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
  RationalMatrix picked(m.rows(), 0);
  Index r = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    RationalMatrix trial(m.rows(), r + 1);
    if (r > 0) trial.leftCols(r) = picked;
    trial.col(r) = m.col(j);
    if (rank(trial) == r + 1) {
      picked = std::move(trial);
      ++r;
    }
  }
  return picked;
}

bool same_column_span(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const Index ra = rank(a);
  const Index rb = rank(b);
  if (ra != rb) return false;
  RationalMatrix glued(a.rows(), a.cols() + b.cols());
  glued << a, b;
  return rank(glued) == ra;
}

bool in_column_span(const RationalMatrix& basis, const RationalVector& x) {
  if (is_zero(x)) return true;
  RationalMatrix glued(basis.rows(), basis.cols() + 1);
  glued << basis, x;
  return rank(glued) == rank(basis);
}

RationalVector project_onto_span(const RationalMatrix& basis, const RationalVector& x) {
  if (basis.cols() == 0) return RationalVector::Zero(x.size());
  const RationalMatrix gram = basis.transpose() * basis;
  const RationalVector rhs = basis.transpose() * x;
  auto lu = exact_lu(gram);
  if (lu.rank() != gram.rows())
    throw std::invalid_argument("project_onto_span: dependent basis columns");
  return basis * lu.solve(rhs);
}

RationalMatrix columns(Index dim, const std::vector<RationalVector>& vectors) {
  RationalMatrix m(dim, static_cast<Index>(vectors.size()));
  for (Index j = 0; j < m.cols(); ++j) m.col(j) = vectors[static_cast<size_t>(j)];
  return m;
}

}  // namespace coneindex
