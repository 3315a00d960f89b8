#include "antireg/io.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "antireg/error.hpp"

namespace antireg {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_dot(const ThresholdGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (std::size_t v = 0; v < g.order(); ++v) os << "  v" << v + 1 << ";\n";
    for (auto [u, v] : g.edges()) os << "  v" << u + 1 << " -- v" << v + 1 << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_edge_csv(const ThresholdGraph& g) {
    std::ostringstream os;
    os << "u,v\n";
    for (auto [u, v] : g.edges()) os << u + 1 << ',' << v + 1 << '\n';
    return os.str();
}

std::string to_json(const ThresholdGraph& g) {
    const auto a = adjacency_matrix(g);
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = g.order();
    j["sequence"] = g.sequence().bits();
    j["degrees"] = degree_sequence(g).sorted;
    j["connected"] = is_connected(g);
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        rows.push_back(std::vector<std::int64_t>(a.row(i).begin(), a.row(i).end()));
    }
    j["adjacency"] = std::move(rows);
    return j.dump() + "\n";
}

std::string to_matrix_market(const IntMatrix& m) {
    const bool symmetric = m.is_symmetric();
    const auto n = m.size();
    std::vector<std::string> lines;
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = symmetric ? col : 0; row < n; ++row) {
            if (m(row, col) == 0) continue;
            lines.push_back(std::to_string(row + 1) + ' ' + std::to_string(col + 1) + ' ' +
                            std::to_string(m(row, col)));
        }
    }
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate integer " << (symmetric ? "symmetric" : "general") << '\n';
    os << n << ' ' << n << ' ' << lines.size() << '\n';
    for (const auto& l : lines) os << l << '\n';
    return os.str();
}

IntMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("matrix market: empty input");
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || object != "matrix" || format != "coordinate") {
        throw InvalidInput("matrix market: expected a coordinate matrix header");
    }
    const bool pattern = field == "pattern";
    if (!pattern && field != "integer") throw InvalidInput("matrix market: unsupported field '" + field + "'");
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general") {
        throw InvalidInput("matrix market: unsupported symmetry '" + symmetry + "'");
    }

    while (std::getline(in, line) && (line.empty() || line[0] == '%')) {
    }
    std::istringstream size_line(line);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(size_line >> rows >> cols >> nnz) || rows != cols || rows == 0) {
        throw InvalidInput("matrix market: bad size line");
    }

    IntMatrix m(rows);
    for (std::size_t k = 0; k < nnz; ++k) {
        if (!std::getline(in, line)) throw InvalidInput("matrix market: truncated entry list");
        std::istringstream entry(line);
        std::size_t i = 0, j = 0;
        IntMatrix::value_type v = 1;
        if (!(entry >> i >> j) || (!pattern && !(entry >> v))) throw InvalidInput("matrix market: bad entry line");
        if (i == 0 || j == 0 || i > rows || j > rows) throw InvalidInput("matrix market: index out of range");
        m(i - 1, j - 1) = v;
        if (symmetric) m(j - 1, i - 1) = v;
    }
    return m;
}

std::string spectrum_csv(const std::vector<Spectrum>& spectra) {
    std::ostringstream os;
    os << "index,value,method\n";
    for (const auto& s : spectra) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            os << i + 1 << ',' << format_double(s.values[i]) << ',' << to_string(s.method) << '\n';
        }
    }
    return os.str();
}

std::string density_csv(const std::vector<DensityRow>& rows) {
    std::ostringstream os;
    os << "grid_point,min_distance,witness_n,witness_j\n";
    for (const auto& r : rows) {
        os << format_double(r.grid_point) << ',' << format_double(r.min_distance) << ',' << r.witness_n << ','
           << r.witness_j << '\n';
    }
    return os.str();
}

}  // namespace antireg
