#include "antireg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "antireg/error.hpp"

namespace antireg {
namespace {

// cos((2j-1) pi / (2n+1)) in long double. The angle never equals pi/2:
// that would need 2(2j-1) = 2n+1, which is impossible by parity.
long double angle_cosine(std::size_t n, std::size_t j) {
    const auto num = static_cast<long double>(2 * j - 1);
    const auto den = static_cast<long double>(2 * n + 1);
    return std::cos(num * std::numbers::pi_v<long double> / den);
}

long double sign_pow(std::size_t k) { return k % 2 == 0 ? 1.0L : -1.0L; }

void require_index(std::size_t n, std::size_t j) {
    if (n == 0) throw InvalidInput("eigenvalue formula: n must be >= 1");
    if (j == 0 || j > n) throw InvalidInput("eigenvalue formula: j must lie in 1..n");
}

Spectrum sorted_spectrum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return Spectrum{std::move(values), Method::closed_form, 0.0};
}

}  // namespace

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::closed_form: return "closed";
        case Method::numeric: return "numeric";
        case Method::oracle: return "oracle";
    }
    return "unknown";
}

double g_eigenvalue(std::size_t n, std::size_t j) {
    require_index(n, j);
    return static_cast<double>(sign_pow(n + 1) / (2.0L * angle_cosine(n, j)));
}

double x_eigenvalue(std::size_t n, std::size_t j) {
    require_index(n, j);
    return static_cast<double>(-2.0L * sign_pow(n) * angle_cosine(n, j));
}

Spectrum closed_form_spectrum_g(std::size_t n) {
    if (n == 0) throw InvalidInput("closed_form_spectrum_g: n must be >= 1");
    std::vector<double> v(n);
    for (std::size_t j = 1; j <= n; ++j) v[j - 1] = g_eigenvalue(n, j);
    return sorted_spectrum(std::move(v));
}

Spectrum closed_form_spectrum_x(std::size_t n) {
    if (n == 0) throw InvalidInput("closed_form_spectrum_x: n must be >= 1");
    std::vector<double> v(n);
    for (std::size_t j = 1; j <= n; ++j) v[j - 1] = x_eigenvalue(n, j);
    return sorted_spectrum(std::move(v));
}

Spectrum spectrum_h(std::size_t n) {
    if (n == 0) throw InvalidInput("spectrum_h: n must be >= 1");
    std::vector<double> v{0.0};
    for (std::size_t j = 1; j < n; ++j) v.push_back(g_eigenvalue(n - 1, j));
    return sorted_spectrum(std::move(v));
}

bool forbidden_interval_check(const Spectrum& s, bool allow_zero, double zero_tolerance) {
    bool zero_used = false;
    for (double v : s.values) {
        if (std::abs(v) >= 0.5) continue;
        if (allow_zero && !zero_used && std::abs(v) <= zero_tolerance) {
            zero_used = true;
            continue;
        }
        return false;
    }
    return true;
}

double max_abs_difference(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) throw InvalidInput("spectrum comparison: lengths differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

double max_scaled_difference(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) throw InvalidInput("spectrum comparison: lengths differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale = std::max(1.0, std::abs(b.values[i]));
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / scale);
    }
    return worst;
}

double min_gap(const Spectrum& s) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < s.size(); ++i) gap = std::min(gap, s.values[i] - s.values[i - 1]);
    return gap;
}

}  // namespace antireg
