#pragma once

#include <cstddef>
#include <vector>

namespace antireg {

struct DensityRow {
    double grid_point;
    double min_distance;
    std::size_t witness_n;
    std::size_t witness_j;  ///< formula index j of lambda_j(G_n), 1-based
};

/// For every grid point g = lo + k*step in [lo, hi] with |g| >= 1/2, the
/// distance from g to the nearest eigenvalue of any G_n, n <= n_max.
/// Ties go to the smallest n, then the smallest j.
/// Throws InvalidInput unless n_max >= 1, lo < hi and step > 0.
std::vector<DensityRow> closure_density_report(std::size_t n_max, double lo, double hi, double step);

}  // namespace antireg
