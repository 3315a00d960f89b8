#include "antireg/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "antireg/error.hpp"

namespace antireg {
namespace {

constexpr int kMaxSweepsPerEigenvalue = 30;

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] couples i-1 and i; off[0] = 0
};

// Householder reduction of a symmetric matrix to tridiagonal form, without
// accumulating the transformations.
Tridiagonal householder_tridiagonalize(std::vector<double>& a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    Tridiagonal t{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    auto& e = t.off;

    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
    }
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) t.diag[i] = at(i, i);
    return t;
}

// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues land in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double> off) {
    const auto n = static_cast<std::ptrdiff_t>(d.size());
    std::vector<double> e(d.size(), 0.0);
    for (std::ptrdiff_t i = 1; i < n; ++i) e[i - 1] = off[i];

    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (std::ptrdiff_t l = 0; l < n; ++l) {
        int sweeps = 0;
        std::ptrdiff_t m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (sweeps++ == kMaxSweepsPerEigenvalue) {
                throw NumericFailure("tridiagonal QL: no convergence for eigenvalue " + std::to_string(l) +
                                     " after " + std::to_string(kMaxSweepsPerEigenvalue) +
                                     " sweeps (|e| = " + std::to_string(std::abs(e[l])) + ")");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            std::ptrdiff_t i;
            for (i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                e[i + 1] = r = std::hypot(f, g);
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

// Number of eigenvalues of the tridiagonal matrix strictly below x (Sturm count).
std::size_t count_below(const Tridiagonal& t, double x) {
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        const double coupling = i == 0 ? 0.0 : t.off[i] * t.off[i] / q;
        q = t.diag[i] - x - coupling;
        if (q == 0.0) q = -std::numeric_limits<double>::min();
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (n == 0 || a.size() != n * n) throw InvalidInput("symmetric_eigenvalues: bad dimensions");
    if (n == 1) return {a[0]};
    auto t = householder_tridiagonalize(a, n);
    auto d = t.diag;
    tridiagonal_ql(d, t.off);
    std::sort(d.begin(), d.end());
    return d;
}

Spectrum numeric_spectrum(const IntMatrix& a, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("numeric_spectrum: tolerance must be positive");
    if (!a.is_symmetric()) throw InvalidInput("numeric_spectrum: matrix is not symmetric");
    const auto n = a.size();
    std::vector<double> dense(a.entries().begin(), a.entries().end());
    const double bound = tol * std::max(1.0, static_cast<double>(a.norm_inf()));

    if (n == 1) return Spectrum{{dense[0]}, Method::numeric, bound};

    auto t = householder_tridiagonalize(dense, n);
    auto values = t.diag;
    tridiagonal_ql(values, t.off);
    std::sort(values.begin(), values.end());

    // The i-th smallest eigenvalue must lie in [values[i] - bound, values[i] + bound].
    for (std::size_t i = 0; i < n; ++i) {
        if (count_below(t, values[i] - bound) > i || count_below(t, values[i] + bound) < i + 1) {
            throw NumericFailure("numeric_spectrum: eigenvalue " + std::to_string(i) + " = " +
                                 std::to_string(values[i]) + " failed the Sturm bracket check at tolerance " +
                                 std::to_string(bound));
        }
    }
    return Spectrum{std::move(values), Method::numeric, bound};
}

}  // namespace antireg
