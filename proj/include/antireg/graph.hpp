#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antireg/int_matrix.hpp"

namespace antireg {

/// Creation sequence b = (b_1, ..., b_n) of a threshold graph with loops.
/// Stored 0-based: bit(i) is b_{i+1}.
class BinarySequence {
public:
    /// Throws InvalidInput if `bits` is empty or holds anything but 0/1.
    explicit BinarySequence(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters, e.g. "101". Commas are ignored.
    static BinarySequence parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t bit(std::size_t i) const { return bits_.at(i); }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    BinarySequence flipped() const;
    std::string to_string() const;

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Degrees with loops counted once.
struct DegreeSequence {
    std::vector<std::int64_t> sorted;     ///< non-decreasing d(G)
    std::vector<std::int64_t> by_vertex;  ///< by_vertex[i] = deg(v_{i+1})

    /// "(1,2,3)"
    std::string to_string() const;
};

/// Undirected edge between 0-based vertices first <= second; first == second is a loop.
using Edge = std::pair<std::size_t, std::size_t>;

/// Threshold graph with loops, fully determined by its creation sequence.
/// Vertex v_j has a loop iff b_j = 1, and v_i ~ v_j iff b_max(i,j) = 1.
class ThresholdGraph {
public:
    explicit ThresholdGraph(BinarySequence sequence) : sequence_(std::move(sequence)) {}

    std::size_t order() const noexcept { return sequence_.size(); }
    const BinarySequence& sequence() const noexcept { return sequence_; }

    bool has_loop(std::size_t v) const { return sequence_.bit(v) == 1; }
    bool adjacent(std::size_t u, std::size_t v) const;

    /// Lexicographic by (min, max); loops appear as (i, i).
    std::vector<Edge> edges() const;

    /// Graph equality is creation-sequence equality.
    friend bool operator==(const ThresholdGraph&, const ThresholdGraph&) = default;

private:
    BinarySequence sequence_;
};

ThresholdGraph from_binary_sequence(const BinarySequence& b);

/// Entry (i,j) = b_max(i,j). A loop is a single 1 on the diagonal.
IntMatrix adjacency_matrix(const ThresholdGraph& g);

DegreeSequence degree_sequence(const ThresholdGraph& g);

ThresholdGraph complement(const ThresholdGraph& g);

/// G_n: alternating sequence starting with n mod 2, ending in 1.
ThresholdGraph antiregular_connected(std::size_t n);

/// H_n = complement(G_n).
ThresholdGraph antiregular_disconnected(std::size_t n);

bool is_antiregular(const ThresholdGraph& g);

/// b_n = 1.
bool is_connected(const ThresholdGraph& g);

/// Connectivity by breadth-first search over edges(); independent of the b_n rule.
/// A vertex counts as reached only through an edge, loops included.
bool is_connected_bfs(const ThresholdGraph& g);

/// Graph with vertex v removed, as a plain adjacency matrix (the result need not
/// keep the creation-sequence labelling).
IntMatrix delete_vertex(const IntMatrix& adjacency, std::size_t v);

/// Loops-counted-once degrees read straight off an adjacency matrix.
std::vector<std::int64_t> degrees_of(const IntMatrix& adjacency);

}  // namespace antireg
