#pragma once

#include "coneindex/rational.hpp"

#include <vector>

namespace coneindex {

// Smith decomposition U*A*V = S with U, V unimodular and S diagonal,
// diag(S) = (d_1, ..., d_r, 0, ...) with d_1 | d_2 | ... | d_r, d_i > 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::vector<Int> invariant_factors;  // the nonzero d_i
};

SNFResult smith_normal_form(const IntMatrix& a);

// Number of nonzero invariant factors (= rank of A over Q).
Index snf_rank(const SNFResult& r);

}  // namespace coneindex
