#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "antireg/char_poly.hpp"
#include "antireg/closure.hpp"
#include "antireg/determinant.hpp"
#include "antireg/eigensolver.hpp"
#include "antireg/error.hpp"
#include "antireg/graph.hpp"
#include "antireg/similarity.hpp"
#include "antireg/spectrum.hpp"

using namespace antireg;

namespace {

const double kSqrt5 = std::sqrt(5.0);
const double kPhi = (1.0 + kSqrt5) / 2.0;
const double kPsi = (1.0 - kSqrt5) / 2.0;

Spectrum values(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return Spectrum{std::move(v), Method::closed_form, 0.0};
}

mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& a) {
    const auto n = a.size();
    if (n == 1) return a[0][0];
    mpz_class total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<mpz_class>> minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) minor[i - 1].push_back(a[i][j]);
            }
        }
        const mpz_class term = a[0][col] * laplace_det(minor);
        total += col % 2 == 0 ? term : mpz_class(-term);
    }
    return total;
}

// Oracle: det(tI - A) by cofactor expansion at t = 0..n, then Newton
// interpolation over the rationals back to monomial coefficients.
std::vector<mpz_class> interpolated_char_poly(const IntMatrix& a) {
    const auto n = a.size();
    std::vector<mpq_class> ys(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = (i == j ? static_cast<long>(t) : 0L) - static_cast<long>(a(i, j));
            }
        }
        ys[t] = laplace_det(m);
    }
    // Divided differences on nodes 0..n.
    std::vector<mpq_class> coef = ys;
    for (std::size_t level = 1; level <= n; ++level) {
        for (std::size_t i = n; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / static_cast<long>(level);
        }
    }
    // Expand sum coef[k] * prod_{i<k} (x - i).
    std::vector<mpq_class> poly(n + 1, 0);
    std::vector<mpq_class> basis{1};
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += coef[k] * basis[i];
        std::vector<mpq_class> next(basis.size() + 1, 0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= basis[i] * static_cast<long>(k);
        }
        basis = std::move(next);
    }
    std::vector<mpz_class> out;
    for (auto& c : poly) {
        c.canonicalize();
        REQUIRE(c.get_den() == 1);
        out.push_back(c.get_num());
    }
    return out;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int spread) {
    std::uniform_int_distribution<int> dist(-spread, spread);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
    }
    return m;
}

CharPoly from_roots(const std::vector<long>& roots) {
    std::vector<mpz_class> c{1};
    for (long r : roots) {
        std::vector<mpz_class> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return CharPoly{std::move(c)};
}

}  // namespace

TEST_CASE("closed_form_spectrum_g") {
    CHECK(closed_form_spectrum_g(1).values == std::vector<double>{1.0});
    const auto s2 = closed_form_spectrum_g(2);
    REQUIRE(s2.size() == 2);
    CHECK(std::abs(s2.values[0] - kPsi) <= 1e-12);
    CHECK(std::abs(s2.values[1] - kPhi) <= 1e-12);
    CHECK(s2.method == Method::closed_form);
    CHECK(s2.tolerance == 0.0);
    CHECK_THROWS_AS(closed_form_spectrum_g(0), InvalidInput);
    CHECK_THROWS_AS(g_eigenvalue(3, 4), InvalidInput);

    for (std::size_t n = 1; n <= 1000; ++n) {
        const auto s = closed_form_spectrum_g(n);
        REQUIRE(std::is_sorted(s.values.begin(), s.values.end()));
        REQUIRE(min_gap(s) > 0.0);
        double sum = 0.0;
        for (double v : s.values) sum += v;
        REQUIRE(std::abs(sum - static_cast<double>((n + 1) / 2)) <= 1e-10 * static_cast<double>(n));
    }
}

TEST_CASE("rational closed-form values come out exact") {
    // (2j-1)/(2n+1) = 1/3 gives cos = 1/2, i.e. lambda = (-1)^{n+1}.
    CHECK(g_eigenvalue(1, 1) == 1.0);
    CHECK(g_eigenvalue(4, 2) == -1.0);
    CHECK(g_eigenvalue(7, 3) == 1.0);
}

TEST_CASE("closed_form_spectrum_x and reciprocal duality") {
    CHECK(closed_form_spectrum_x(1).values == std::vector<double>{1.0});
    const auto x2 = closed_form_spectrum_x(2);
    CHECK(std::abs(x2.values[0] + kPhi) <= 1e-12);
    CHECK(std::abs(x2.values[1] + kPsi) <= 1e-12);
    for (std::size_t n = 1; n <= 100; ++n) {
        std::vector<double> inv;
        for (std::size_t j = 1; j <= n; ++j) {
            const double g = g_eigenvalue(n, j);
            REQUIRE(std::abs(1.0 / x_eigenvalue(n, j) - g) <= 1e-12 * std::max(1.0, std::abs(g)));
            inv.push_back(1.0 / x_eigenvalue(n, j));
        }
        REQUIRE(max_scaled_difference(values(inv), closed_form_spectrum_g(n)) <= 1e-12);
    }
}

TEST_CASE("spectrum_h") {
    CHECK(spectrum_h(1).values == std::vector<double>{0.0});
    CHECK(spectrum_h(2).values == std::vector<double>{0.0, 1.0});
    const auto h3 = spectrum_h(3);
    const auto numeric = numeric_spectrum(adjacency_matrix(antiregular_disconnected(3)), 1e-12);
    CHECK(max_abs_difference(h3, numeric) <= 1e-12);
    CHECK(max_abs_difference(h3, values({0.0, kPsi, kPhi})) <= 1e-12);
    CHECK(adjacency_matrix(antiregular_disconnected(2)) == IntMatrix{{1, 0}, {0, 0}});
}

TEST_CASE("numeric_spectrum") {
    CHECK(numeric_spectrum(IntMatrix{{1}}, 1e-12).values == std::vector<double>{1.0});
    const auto m2 = numeric_spectrum(hankel_m(2), 1e-12);
    CHECK(std::abs(m2.values[0] - kPsi) <= m2.tolerance);
    CHECK(std::abs(m2.values[1] - kPhi) <= m2.tolerance);
    CHECK(m2.method == Method::numeric);
    CHECK_THROWS_AS(numeric_spectrum(IntMatrix{{0, 1}, {0, 0}}, 1e-12), InvalidInput);
    CHECK_THROWS_AS(numeric_spectrum(IntMatrix{{1}}, 0.0), InvalidInput);

    SUBCASE("matches the closed form for n <= 200 within 1e-10") {
        for (std::size_t n = 1; n <= 200; ++n) {
            const auto s = numeric_spectrum(adjacency_matrix(antiregular_connected(n)), 1e-12);
            REQUIRE(max_scaled_difference(s, closed_form_spectrum_g(n)) <= 1e-10);
        }
    }
    SUBCASE("2x2 symmetric matrices against the quadratic formula") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_symmetric(rng, 2, 50);
            const double p = static_cast<double>(a(0, 0) + a(1, 1));
            const double q = static_cast<double>(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
            const double disc = std::sqrt(p * p - 4 * q);
            const auto s = numeric_spectrum(a, 1e-12);
            CHECK(std::abs(s.values[0] - (p - disc) / 2) <= s.tolerance);
            CHECK(std::abs(s.values[1] - (p + disc) / 2) <= s.tolerance);
        }
    }
    SUBCASE("random symmetric matrices: trace and Frobenius identities") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 60; ++trial) {
            const auto n = 1 + rng() % 40;
            const auto a = random_symmetric(rng, n, 5);
            const auto s = numeric_spectrum(a, 1e-12);
            double sum = 0.0, sq = 0.0, fro = 0.0;
            for (double v : s.values) {
                sum += v;
                sq += v * v;
            }
            for (auto v : a.entries()) fro += static_cast<double>(v * v);
            CHECK(std::abs(sum - static_cast<double>(a.trace())) <= 1e-9 * std::max(1.0, fro));
            CHECK(std::abs(sq - fro) <= 1e-9 * std::max(1.0, fro));
        }
    }
}

TEST_CASE("symmetric_eigenvalues on dense input") {
    CHECK_THROWS_AS(symmetric_eigenvalues({1.0, 2.0}, 2), InvalidInput);
    const auto ev = symmetric_eigenvalues({2, 1, 0, 1, 2, 1, 0, 1, 2}, 3);
    // Tridiagonal Toeplitz: 2 + 2cos(k pi / 4), k = 1..3.
    CHECK(std::abs(ev[0] - (2 - std::sqrt(2.0))) <= 1e-14);
    CHECK(std::abs(ev[1] - 2) <= 1e-14);
    CHECK(std::abs(ev[2] - (2 + std::sqrt(2.0))) <= 1e-14);
}

TEST_CASE("char_poly_exact examples") {
    CHECK(char_poly_exact(hankel_m(1)).to_string() == "x - 1");
    CHECK(char_poly_exact(hankel_m(2)).to_string() == "x^2 - x - 1");
    CHECK(char_poly_exact(hankel_m(3)).to_string() == "x^3 - 2x^2 - x + 1");
    CHECK(char_poly_exact(x_matrix(2)).to_string() == "x^2 + x - 1");
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto p = char_poly_exact(hankel_m(n));
        for (std::size_t j = 1; j <= n; ++j) CHECK(std::abs(p.evaluate(g_eigenvalue(n, j))) <= 1e-12);
    }
}

TEST_CASE("char poly routes agree with an interpolation oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = 1 + rng() % 6;
        IntMatrix a(n);
        std::uniform_int_distribution<int> dist(-4, 4);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
        }
        const auto want = interpolated_char_poly(a);
        REQUIRE(char_poly_faddeev_leverrier(a).coefficients == want);
        const mpz_class sign = n % 2 == 0 ? 1 : -1;
        REQUIRE(want[0] == sign * determinant_exact(a));

        IntMatrix t(n);
        for (std::size_t i = 0; i < n; ++i) {
            t(i, i) = dist(rng);
            if (i + 1 < n) {
                t(i, i + 1) = dist(rng);
                t(i + 1, i) = dist(rng);
            }
        }
        REQUIRE(char_poly_tridiagonal(t).coefficients == interpolated_char_poly(t));
        REQUIRE(char_poly_faddeev_leverrier(t) == char_poly_tridiagonal(t));
    }
    CHECK_THROWS_AS(char_poly_tridiagonal(hankel_m(3)), InvalidInput);
}

TEST_CASE("similar matrices share characteristic polynomials exactly (n <= 64)") {
    for (std::size_t n = 1; n <= 64; ++n) {
        CAPTURE(n);
        REQUIRE(char_poly_exact(adjacency_matrix(antiregular_connected(n))) == char_poly_exact(hankel_m(n)));
        const auto pinv = char_poly_exact(m_inverse(n));
        REQUIRE(pinv == char_poly_exact(y_matrix(n)));
        REQUIRE(pinv == char_poly_exact(x_matrix(n)));
    }
}

TEST_CASE("real_roots") {
    const auto s = real_roots(from_roots({-3, 1, 2, 7}), 1e-12);
    REQUIRE(s.size() == 4);
    const std::vector<double> want{-3, 1, 2, 7};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s.values[i] - want[i]) <= 1e-12);
    CHECK(s.method == Method::oracle);
    CHECK_THROWS_AS(real_roots(from_roots({1, 1, 2})), NumericFailure);
    CHECK_THROWS_AS(real_roots(CharPoly{{1, 0, 1}}), NumericFailure);  // x^2 + 1
    CHECK_THROWS_AS(real_roots(from_roots({1}), 0.0), InvalidInput);

    SUBCASE("three-way agreement for G_n, n <= 12") {
        for (std::size_t n = 1; n <= 12; ++n) {
            const auto a = adjacency_matrix(antiregular_connected(n));
            const auto oracle = oracle_spectrum(a, 1e-12);
            const auto numeric = numeric_spectrum(a, 1e-12);
            const auto closed = closed_form_spectrum_g(n);
            REQUIRE(max_abs_difference(oracle, closed) <= 1e-9);
            REQUIRE(max_abs_difference(numeric, closed) <= 1e-9);
            REQUIRE(max_abs_difference(oracle, numeric) <= 1e-9);
        }
    }
    SUBCASE("oracle vs numeric on random symmetric matrices") {
        std::mt19937_64 rng(17);
        int checked = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_symmetric(rng, 1 + rng() % 8, 6);
            Spectrum oracle;
            try {
                oracle = oracle_spectrum(a, 1e-12);
            } catch (const NumericFailure&) {
                continue;  // repeated eigenvalue; the oracle only handles simple roots
            }
            ++checked;
            CHECK(max_abs_difference(oracle, numeric_spectrum(a, 1e-12)) <= 1e-9);
        }
        CHECK(checked > 20);
    }
}

TEST_CASE("forbidden_interval_check") {
    for (std::size_t n = 1; n <= 1000; ++n) {
        REQUIRE(forbidden_interval_check(closed_form_spectrum_g(n), false));
        REQUIRE(forbidden_interval_check(spectrum_h(n), true));
    }
    CHECK_FALSE(forbidden_interval_check(values({0.4}), false));
    CHECK_FALSE(forbidden_interval_check(spectrum_h(3), false));
    CHECK_FALSE(forbidden_interval_check(values({0.0, 0.0}), true));
    CHECK(forbidden_interval_check(values({1e-15, 2.0}), true, 1e-12));
}

TEST_CASE("product of eigenvalues equals det(M_n), n <= 60") {
    for (std::size_t n = 1; n <= 60; ++n) {
        long double prod = 1.0L;
        for (double v : closed_form_spectrum_g(n).values) prod *= v;
        const double det = determinant_exact(hankel_m(n)).get_d();
        REQUIRE(std::abs(static_cast<double>(prod) - det) <= 1e-8);
    }
}

TEST_CASE("closure_density_report") {
    CHECK_THROWS_AS(closure_density_report(0, -1, 1, 0.1), InvalidInput);
    CHECK_THROWS_AS(closure_density_report(5, 1, -1, 0.1), InvalidInput);
    CHECK_THROWS_AS(closure_density_report(5, -1, 1, 0.0), InvalidInput);

    SUBCASE("grid point 1 is hit exactly by G_1") {
        for (std::size_t n_max : {1, 5, 50}) {
            const auto rows = closure_density_report(n_max, 1.0, 2.0, 0.5);
            REQUIRE(rows.front().grid_point == 1.0);
            CHECK(rows.front().min_distance == 0.0);
            CHECK(rows.front().witness_n == 1);
            CHECK(rows.front().witness_j == 1);
        }
    }
    SUBCASE("matches a brute-force minimum") {
        const std::size_t n_max = 30;
        const auto rows = closure_density_report(n_max, -4.0, 4.0, 0.07);
        for (const auto& r : rows) {
            double best = INFINITY;
            for (std::size_t n = 1; n <= n_max; ++n) {
                for (std::size_t j = 1; j <= n; ++j) best = std::min(best, std::abs(g_eigenvalue(n, j) - r.grid_point));
            }
            REQUIRE(r.min_distance == best);
            REQUIRE(std::abs(g_eigenvalue(r.witness_n, r.witness_j) - r.grid_point) == best);
        }
    }
    SUBCASE("nothing inside the forbidden interval; +-1/2 approached but never reached") {
        double prev_lo = INFINITY, prev_hi = INFINITY;
        for (std::size_t n_max : {50, 100, 200, 400}) {
            const auto rows = closure_density_report(n_max, -10.0, 10.0, 0.01);
            double at_minus = -1, at_plus = -1;
            for (const auto& r : rows) {
                REQUIRE(std::abs(r.grid_point) >= 0.5);
                if (r.grid_point == -0.5) at_minus = r.min_distance;
                if (r.grid_point == 0.5) at_plus = r.min_distance;
            }
            REQUIRE(at_minus > 0.0);
            REQUIRE(at_plus > 0.0);
            CHECK(at_minus < prev_lo);
            CHECK(at_plus < prev_hi);
            prev_lo = at_minus;
            prev_hi = at_plus;
        }
    }
    SUBCASE("worst distance over the grid shrinks as n_max grows") {
        double prev = INFINITY;
        for (std::size_t n_max : {50, 100, 200, 400}) {
            double worst = 0.0;
            for (const auto& r : closure_density_report(n_max, -10.0, 10.0, 0.01)) worst = std::max(worst, r.min_distance);
            MESSAGE("n_max = " << n_max << ": max min_distance = " << worst);
            CHECK(worst < prev);
            prev = worst;
        }
    }
}
