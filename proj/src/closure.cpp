#include "antireg/closure.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "antireg/error.hpp"
#include "antireg/spectrum.hpp"

namespace antireg {
namespace {

struct Tagged {
    double value;
    std::size_t n;
    std::size_t j;
};

bool operator<(const Tagged& a, const Tagged& b) {
    return std::tie(a.value, a.n, a.j) < std::tie(b.value, b.n, b.j);
}

}  // namespace

std::vector<DensityRow> closure_density_report(std::size_t n_max, double lo, double hi, double step) {
    if (n_max == 0) throw InvalidInput("closure_density_report: n_max must be >= 1");
    if (!(lo < hi)) throw InvalidInput("closure_density_report: need lo < hi");
    if (!(step > 0.0) || !std::isfinite(step)) throw InvalidInput("closure_density_report: step must be positive");

    std::vector<Tagged> all;
    all.reserve(n_max * (n_max + 1) / 2);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t j = 1; j <= n; ++j) all.push_back({g_eigenvalue(n, j), n, j});
    }
    std::sort(all.begin(), all.end());

    auto first_with_value = [&](double v) {
        return std::lower_bound(all.begin(), all.end(), v, [](const Tagged& t, double x) { return t.value < x; });
    };

    const double snap = 1e-9 * step;
    const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    std::vector<DensityRow> rows;
    for (std::size_t k = 0; k <= steps; ++k) {
        double g = lo + static_cast<double>(k) * step;
        if (std::abs(g - hi) <= snap) g = hi;
        if (std::abs(std::abs(g) - 0.5) <= snap) g = std::copysign(0.5, g);
        if (std::abs(g) < 0.5) continue;

        // Nearest candidates: first value >= g, and the first entry of the run just below g.
        const auto above = first_with_value(g);
        const Tagged* best = nullptr;
        double best_dist = 0.0;
        auto consider = [&](const Tagged& t) {
            const double dist = std::abs(t.value - g);
            if (!best || dist < best_dist || (dist == best_dist && std::tie(t.n, t.j) < std::tie(best->n, best->j))) {
                best = &t;
                best_dist = dist;
            }
        };
        if (above != all.end()) consider(*above);
        if (above != all.begin()) consider(*first_with_value(std::prev(above)->value));
        rows.push_back({g, best_dist, best->n, best->j});
    }
    return rows;
}

}  // namespace antireg
