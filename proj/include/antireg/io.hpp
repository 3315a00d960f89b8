#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "antireg/closure.hpp"
#include "antireg/graph.hpp"
#include "antireg/int_matrix.hpp"
#include "antireg/spectrum.hpp"

// Text formats. Everything here is byte-stable: fixed ordering, LF line
// endings, 17 significant digits for floating point, no timestamps.

namespace antireg {

/// printf("%.17g"); negative zero prints as "0".
std::string format_double(double v);

/// Undirected DOT graph; vertices v1..vn, loops as `vi -- vi`.
std::string to_dot(const ThresholdGraph& g);

/// Edge list CSV with header `u,v`, 1-based vertex numbers, loops as (i,i).
std::string to_edge_csv(const ThresholdGraph& g);

/// {"schema":1,"n":..,"sequence":[..],"degrees":[..],"connected":..,"adjacency":[[..]]}
/// `degrees` is the sorted degree sequence.
std::string to_json(const ThresholdGraph& g);

/// Matrix Market coordinate format, integer field, 1-based. Symmetric matrices
/// store only the lower triangle, ordered by (column, row).
std::string to_matrix_market(const IntMatrix& m);

/// Reads coordinate Matrix Market (integer or pattern; general or symmetric).
/// Throws InvalidInput on malformed input.
IntMatrix read_matrix_market(std::istream& in);

/// `index,value,method` rows, index 1-based within each spectrum.
std::string spectrum_csv(const std::vector<Spectrum>& spectra);

/// `grid_point,min_distance,witness_n,witness_j`.
std::string density_csv(const std::vector<DensityRow>& rows);

}  // namespace antireg
