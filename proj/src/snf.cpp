#include "coneindex/snf.hpp"

namespace coneindex {

namespace {

// Position of the entry of least nonzero magnitude in S(t:, t:), if any.
bool find_pivot(const IntMatrix& s, Index t, Index& pr, Index& pc) {
  bool found = false;
  Int best = 0;
  for (Index i = t; i < s.rows(); ++i) {
    for (Index j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      const Int mag = abs(s(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

bool pivot_clears_cross(const IntMatrix& s, Index t) {
  for (Index i = t + 1; i < s.rows(); ++i)
    if (s(i, t) != 0) return false;
  for (Index j = t + 1; j < s.cols(); ++j)
    if (s(t, j) != 0) return false;
  return true;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  SNFResult res;
  res.U = IntMatrix::Identity(m, m);
  res.V = IntMatrix::Identity(n, n);
  res.S = a;
  IntMatrix& s = res.S;

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    Index pr = t, pc = t;
    if (!find_pivot(s, t, pr, pc)) break;
    s.row(t).swap(s.row(pr));
    res.U.row(t).swap(res.U.row(pr));
    s.col(t).swap(s.col(pc));
    res.V.col(t).swap(res.V.col(pc));

    while (true) {
      // Reduce the pivot cross by division with remainder.
      for (Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        const Int q = s(i, t) / s(t, t);
        if (q != 0) {
          s.row(i) -= q * s.row(t);
          res.U.row(i) -= q * res.U.row(t);
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        const Int q = s(t, j) / s(t, t);
        if (q != 0) {
          s.col(j) -= q * s.col(t);
          res.V.col(j) -= q * res.V.col(t);
        }
      }
      if (pivot_clears_cross(s, t)) {
        // Enforce divisibility of the remaining block by the pivot.
        bool fixed = true;
        for (Index i = t + 1; i < m && fixed; ++i) {
          for (Index j = t + 1; j < n && fixed; ++j) {
            if (s(i, j) % s(t, t) != 0) {
              s.row(t) += s.row(i);
              res.U.row(t) += res.U.row(i);
              fixed = false;
            }
          }
        }
        if (fixed) break;
      } else {
        Index qr = t, qc = t;
        find_pivot(s, t, qr, qc);
        s.row(t).swap(s.row(qr));
        res.U.row(t).swap(res.U.row(qr));
        s.col(t).swap(s.col(qc));
        res.V.col(t).swap(res.V.col(qc));
      }
    }

    if (s(t, t) < 0) {
      s.row(t) *= -1;
      res.U.row(t) *= -1;
    }
  }

  for (Index t = 0; t < steps; ++t)
    if (s(t, t) != 0) res.invariant_factors.push_back(s(t, t));
  return res;
}

Index snf_rank(const SNFResult& r) {
  return static_cast<Index>(r.invariant_factors.size());
}

}  // namespace coneindex
