#include "antireg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "antireg/char_poly.hpp"
#include "antireg/closure.hpp"
#include "antireg/eigensolver.hpp"
#include "antireg/error.hpp"
#include "antireg/graph.hpp"
#include "antireg/io.hpp"
#include "antireg/similarity.hpp"
#include "antireg/spectrum.hpp"
#include "antireg/verify.hpp"

namespace antireg {
namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& text) {
    std::size_t v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw InvalidInput("expected a positive integer, got '" + text + "'");
    if (v == 0) throw InvalidInput("n must be >= 1");
    return v;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << content;
    f.close();
    if (!f) throw IoError("write to '" + path + "' failed");
}

ThresholdGraph graph_for(const std::string& kind, const std::string& value) {
    if (kind == "gn") return antiregular_connected(parse_count(value));
    if (kind == "hn") return antiregular_disconnected(parse_count(value));
    return ThresholdGraph(BinarySequence::parse(value));
}

std::string render(const ThresholdGraph& g, const std::string& format) {
    if (format == "dot") return to_dot(g);
    if (format == "csv") return to_edge_csv(g);
    if (format == "json") return to_json(g);
    return to_matrix_market(adjacency_matrix(g));
}

std::string summary(const ThresholdGraph& g) {
    return "sequence: " + g.sequence().to_string() + "\ndegrees: " + degree_sequence(g).to_string() + "\n" +
           (is_connected(g) ? "connected" : "disconnected") + "\n";
}

int cmd_generate(const std::string& kind, const std::string& value, const std::string& format,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto g = graph_for(kind, value);
    if (format.empty()) {
        out << summary(g);
    } else if (out_path.empty()) {
        err << summary(g);
        out << render(g, format);
    } else {
        write_file(out_path, render(g, format));
        out << summary(g);
    }
    return kExitOk;
}

struct SpectrumTarget {
    IntMatrix matrix;
    std::optional<Spectrum> closed;
};

SpectrumTarget spectrum_target(const std::string& target, const std::string& value) {
    if (target == "gn") {
        const auto n = parse_count(value);
        return {adjacency_matrix(antiregular_connected(n)), closed_form_spectrum_g(n)};
    }
    if (target == "hn") {
        const auto n = parse_count(value);
        return {adjacency_matrix(antiregular_disconnected(n)), spectrum_h(n)};
    }
    if (target == "x") {
        const auto n = parse_count(value);
        return {x_matrix(n), closed_form_spectrum_x(n)};
    }
    const ThresholdGraph g(BinarySequence::parse(value));
    const auto n = g.order();
    SpectrumTarget t{adjacency_matrix(g), std::nullopt};
    if (g == antiregular_connected(n)) t.closed = closed_form_spectrum_g(n);
    if (g == antiregular_disconnected(n)) t.closed = spectrum_h(n);
    return t;
}

int cmd_spectrum(const std::string& target, const std::string& value, const std::string& method, double tol,
                 std::size_t oracle_cap, std::ostream& out) {
    if (!(tol > 0.0)) throw InvalidInput("--tol must be positive");
    auto t = spectrum_target(target, value);
    const auto n = t.matrix.size();
    const bool all = method == "all";

    std::vector<Spectrum> spectra;
    std::vector<std::string> notes;
    if (method == "closed" || all) {
        if (t.closed) {
            spectra.push_back(*t.closed);
        } else if (!all) {
            throw InvalidInput("no closed form for sequence " + value + " (only G_n and H_n have one)");
        } else {
            notes.push_back("closed form skipped: sequence is neither G_n nor H_n");
        }
    }
    if (method == "numeric" || all) spectra.push_back(numeric_spectrum(t.matrix, tol));
    if (method == "oracle" || all) {
        if (n <= oracle_cap) {
            spectra.push_back(oracle_spectrum(t.matrix, tol));
        } else if (!all) {
            throw InvalidInput("oracle method is limited to n <= " + std::to_string(oracle_cap) +
                               " (raise with --oracle-cap)");
        } else {
            notes.push_back("oracle skipped: n = " + std::to_string(n) + " exceeds --oracle-cap " +
                            std::to_string(oracle_cap));
        }
    }

    out << spectrum_csv(spectra);
    for (const auto& note : notes) out << "# " << note << '\n';
    if (all) {
        double worst = 0.0;
        for (std::size_t a = 0; a < spectra.size(); ++a) {
            for (std::size_t b = a + 1; b < spectra.size(); ++b) {
                worst = std::max(worst, max_abs_difference(spectra[a], spectra[b]));
            }
        }
        out << "# max_pairwise_discrepancy: " << format_double(worst) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& n_text, std::ostream& out) {
    const auto reports = run_suites(suite, parse_count(n_text));
    bool ok = true;
    for (const auto& r : reports) {
        r.print(out);
        ok = ok && r.passed();
    }
    out << (ok ? "all checks passed\n" : "FAILED\n");
    return ok ? kExitOk : kExitFailure;
}

int cmd_sweep(const std::string& n_text, double lo, double hi, double step, const std::string& out_path,
              std::ostream& out) {
    const auto rows = closure_density_report(parse_count(n_text), lo, hi, step);
    const auto csv = density_csv(rows);
    if (out_path.empty()) {
        out << csv;
    } else {
        write_file(out_path, csv);
        double worst = 0.0;
        for (const auto& r : rows) worst = std::max(worst, r.min_distance);
        out << "wrote " << rows.size() << " grid points to " << out_path
            << "; max min_distance = " << format_double(worst) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Anti-regular threshold graphs with loops: construction, exact similarity chain, spectra"};
    app.name("antireg");
    app.require_subcommand(1);

    std::string kind, value, format, out_path;
    auto* generate = app.add_subcommand("generate", "Build G_n, H_n or a threshold graph from its bit string");
    generate->add_option("kind", kind, "gn | hn | sequence")->required()->check(CLI::IsMember({"gn", "hn", "sequence"}));
    generate->add_option("value", value, "n for gn/hn, bit string (e.g. 101) for sequence")->required();
    generate->add_option("--format", format, "dot | mm | csv | json")
        ->check(CLI::IsMember({"dot", "mm", "matrix-market", "csv", "json"}));
    generate->add_option("--out,-o", out_path, "output file (default: stdout)");

    std::string target, method = "closed";
    double tol = 1e-12;
    std::size_t oracle_cap = kDefaultOracleCap;
    auto* spectrum = app.add_subcommand("spectrum", "Print the sorted adjacency spectrum as CSV");
    spectrum->add_option("target", target, "gn | hn | x | sequence")
        ->required()
        ->check(CLI::IsMember({"gn", "hn", "x", "sequence"}));
    spectrum->add_option("value", value, "n, or a bit string for sequence")->required();
    spectrum->add_option("--method", method, "closed | numeric | oracle | all")
        ->check(CLI::IsMember({"closed", "numeric", "oracle", "all"}));
    spectrum->add_option("--tol", tol, "numeric tolerance and oracle root precision");
    spectrum->add_option("--oracle-cap", oracle_cap, "largest n for the exact characteristic-polynomial oracle");

    std::string suite, n_text;
    auto* verify = app.add_subcommand("verify", "Run invariant suites for n = 1..n_max");
    verify->add_option("suite", suite, "similarity | determinant | spectrum | degrees | all")
        ->required()
        ->check(CLI::IsMember({"similarity", "determinant", "spectrum", "degrees", "all"}));
    verify->add_option("n_max", n_text)->required();

    double lo = -10.0, hi = 10.0, step = 0.01;
    auto* sweep = app.add_subcommand("sweep", "Distance from grid points to the eigenvalues of G_1..G_nmax (CSV)");
    sweep->add_option("n_max", n_text)->required();
    sweep->add_option("--lo", lo);
    sweep->add_option("--hi", hi);
    sweep->add_option("--step", step);
    sweep->add_option("--out,-o", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) return cmd_generate(kind, value, format, out_path, out, err);
        if (*spectrum) return cmd_spectrum(target, value, method, tol, oracle_cap, out);
        if (*verify) return cmd_verify(suite, n_text, out);
        return cmd_sweep(n_text, lo, hi, step, out_path, out);
    } catch (const InvalidInput& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace antireg
