#pragma once

#include <cstddef>
#include <vector>

#include "antireg/int_matrix.hpp"
#include "antireg/spectrum.hpp"

namespace antireg {

/// Householder reduction to tridiagonal form followed by the implicit-shift QL
/// iteration (tred1/tql1 lineage). Input is a dense symmetric n x n row-major
/// array; returns the eigenvalues sorted ascending. At most 30 QL sweeps per
/// eigenvalue before NumericFailure.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

/// Eigenvalues of a symmetric integer matrix. The returned tolerance is
/// tol * max(1, ||A||_inf); each value is certified with a Sturm count on the
/// tridiagonal form to lie within that distance of a true eigenvalue.
/// Throws InvalidInput for non-symmetric input or tol <= 0.
Spectrum numeric_spectrum(const IntMatrix& a, double tol);

}  // namespace antireg
