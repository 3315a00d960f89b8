#pragma once

#include <gmpxx.h>

#include "antireg/int_matrix.hpp"

namespace antireg {

/// Exact determinant by Bareiss fraction-free elimination over arbitrary
/// precision integers. Row swaps are used only when a pivot is zero.
mpz_class determinant_exact(const IntMatrix& a);

}  // namespace antireg
