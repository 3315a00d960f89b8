#include "antireg/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "antireg/error.hpp"

namespace antireg {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw InvalidInput("binary sequence must be non-empty");
    for (auto b : bits_) {
        if (b > 1) throw InvalidInput("binary sequence entries must be 0 or 1");
    }
}

BinarySequence BinarySequence::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c != ',') {
            throw InvalidInput("invalid character in bit string: '" + std::string(1, c) + "'");
        }
    }
    return BinarySequence(std::move(bits));
}

BinarySequence BinarySequence::flipped() const {
    auto out = bits_;
    for (auto& b : out) b ^= 1U;
    return BinarySequence(std::move(out));
}

std::string BinarySequence::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::string DegreeSequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << ',';
        os << sorted[i];
    }
    os << ')';
    return os.str();
}

bool ThresholdGraph::adjacent(std::size_t u, std::size_t v) const {
    return sequence_.bit(std::max(u, v)) == 1;
}

std::vector<Edge> ThresholdGraph::edges() const {
    std::vector<Edge> out;
    const auto n = order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (sequence_.bit(j)) out.emplace_back(i, j);
        }
    }
    return out;
}

ThresholdGraph from_binary_sequence(const BinarySequence& b) { return ThresholdGraph(b); }

IntMatrix adjacency_matrix(const ThresholdGraph& g) {
    const auto n = g.order();
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = g.sequence().bit(std::max(i, j));
    }
    return a;
}

std::vector<std::int64_t> degrees_of(const IntMatrix& adjacency) {
    const auto n = adjacency.size();
    std::vector<std::int64_t> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) deg[i] += adjacency(i, j);
    }
    return deg;
}

DegreeSequence degree_sequence(const ThresholdGraph& g) {
    // v_j (1-based) is joined to v_1..v_j, itself once, iff b_j = 1, and to every
    // later dominating vertex. Equals the row sums of A(G).
    const auto n = g.order();
    DegreeSequence d;
    d.by_vertex.assign(n, 0);
    std::int64_t later_dominating = 0;
    for (std::size_t j = n; j-- > 0;) {
        d.by_vertex[j] = later_dominating + (g.has_loop(j) ? static_cast<std::int64_t>(j + 1) : 0);
        if (g.has_loop(j)) ++later_dominating;
    }
    d.sorted = d.by_vertex;
    std::sort(d.sorted.begin(), d.sorted.end());
    return d;
}

ThresholdGraph complement(const ThresholdGraph& g) { return ThresholdGraph(g.sequence().flipped()); }

ThresholdGraph antiregular_connected(std::size_t n) {
    if (n == 0) throw InvalidInput("antiregular_connected: n must be >= 1");
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((n + i) % 2);
    return ThresholdGraph(BinarySequence(std::move(bits)));
}

ThresholdGraph antiregular_disconnected(std::size_t n) {
    if (n == 0) throw InvalidInput("antiregular_disconnected: n must be >= 1");
    return complement(antiregular_connected(n));
}

bool is_antiregular(const ThresholdGraph& g) {
    const auto d = degree_sequence(g);
    return std::adjacent_find(d.sorted.begin(), d.sorted.end()) == d.sorted.end();
}

bool is_connected(const ThresholdGraph& g) { return g.sequence().bit(g.order() - 1) == 1; }

bool is_connected_bfs(const ThresholdGraph& g) {
    const auto n = g.order();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // Reachability by walks of length >= 1 from v_n, so a lone loopless vertex
    // (H_1) counts as disconnected and a lone looped vertex (G_1) as connected.
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue;
    std::size_t reached = 0;
    if (g.has_loop(n - 1)) {
        seen[n - 1] = true;
        reached = 1;
    }
    for (auto v : adj[n - 1]) {
        if (!seen[v]) {
            seen[v] = true;
            ++reached;
        }
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

IntMatrix delete_vertex(const IntMatrix& adjacency, std::size_t v) {
    const auto n = adjacency.size();
    if (n < 2 || v >= n) throw InvalidInput("delete_vertex: vertex out of range or graph too small");
    IntMatrix out(n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
        if (i == v) continue;
        for (std::size_t j = 0, c = 0; j < n; ++j) {
            if (j == v) continue;
            out(r, c++) = adjacency(i, j);
        }
        ++r;
    }
    return out;
}

}  // namespace antireg
