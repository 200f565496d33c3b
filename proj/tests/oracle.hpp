#pragma once

// Test-side oracle: textbook Gauss-Jordan elimination with plain
// fraction arithmetic and first-nonzero pivoting, written against the
// public Matrix entry interface only. It stays independent of the
// pivot-optimized elimination inside the library so the two can be
// compared entry by entry.

#include "acx/matrix.hpp"

namespace acx::oracle {

Matrix naive_rref(const Matrix& m);
int naive_rank(const Matrix& m);
// Canonical kernel basis rows (echelonized with the same naive loop).
Matrix naive_kernel_rows(const Matrix& m);

}  // namespace acx::oracle
