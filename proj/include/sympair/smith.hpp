#pragma once

#include "sympair/matrix.hpp"

namespace sympair {

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular
};

// U*M*V == D, diagonal entries nonnegative with d_1 | d_2 | ... (zeros last).
// Pivot choice: smallest nonzero |entry|, ties broken leftmost then uppermost,
// so U and V are reproducible.
SmithForm smith_normal_form(const IntMatrix& m);

std::vector<Integer> smith_diagonal(const IntMatrix& m);

// Z-basis (as columns) of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Multiply each row by the lcm of its denominators.
IntMatrix clear_row_denominators(const RatMatrix& m);

}  // namespace sympair
