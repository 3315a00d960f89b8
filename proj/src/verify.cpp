#include "antireg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>

#include "antireg/char_poly.hpp"
#include "antireg/determinant.hpp"
#include "antireg/eigensolver.hpp"
#include "antireg/error.hpp"
#include "antireg/graph.hpp"
#include "antireg/io.hpp"
#include "antireg/similarity.hpp"
#include "antireg/spectrum.hpp"

namespace antireg {
namespace {

std::string range_text(std::size_t from, std::size_t to, std::size_t requested) {
    std::ostringstream os;
    if (from > to) {
        os << "no n in range";
    } else {
        os << "n = " << from << ".." << to;
    }
    if (to < requested) os << " (capped from " << requested << ")";
    return os.str();
}

// Runs pred(n) for n = from..to and records the first failure (false or a throw).
CheckResult sweep(std::string name, std::size_t from, std::size_t to, std::size_t requested,
                  const std::function<bool(std::size_t, std::string&)>& pred) {
    CheckResult r{std::move(name), true, range_text(from, to, requested), std::nullopt};
    for (std::size_t n = from; n <= to; ++n) {
        std::string why;
        bool ok = false;
        try {
            ok = pred(n, why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!ok) {
            r.passed = false;
            r.first_failing_n = n;
            r.detail += "; failed at n = " + std::to_string(n) + (why.empty() ? "" : ": " + why);
            break;
        }
    }
    return r;
}

// Tracks the worst value a sweep observed so the report can print it.
struct Worst {
    double value = 0.0;
    void update(double v) { value = std::max(value, v); }
    std::string text() const { return "worst " + format_double(value); }
};

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

int det_sign_oracle_pattern(std::size_t n) { return (n / 2) % 2 == 0 ? 1 : -1; }
int det_sign_odd_exponent(std::size_t n) { return ((n - 1) / 2) % 2 == 0 ? 1 : -1; }

bool is_alternating(const BinarySequence& b) {
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (b.bit(i) == b.bit(i - 1)) return false;
    }
    return true;
}

std::vector<std::int64_t> iota_from(std::int64_t start, std::size_t count) {
    std::vector<std::int64_t> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = start + static_cast<std::int64_t>(i);
    return v;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteReport::print(std::ostream& os) const {
    os << "== " << suite << '\n';
    for (const auto& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.detail << "]\n";
    for (const auto& note : notes) os << "note: " << note << '\n';
}

SuiteReport verify_similarity(std::size_t n_max) {
    SuiteReport rep{"similarity", {}, {}};
    rep.checks.push_back(sweep("permutation_sigma is a bijection", 1, n_max, n_max, [](std::size_t n, std::string&) {
        const auto s = permutation_sigma(n);
        auto imgs = s.images();
        std::sort(imgs.begin(), imgs.end());
        for (std::size_t i = 0; i < n; ++i) {
            if (imgs[i] != i) return false;
        }
        return true;
    }));
    rep.checks.push_back(sweep("M_n block recursion [0 0 1; 0 M_{n-2} 1; 1 1 1]", 3, n_max, n_max,
                               [](std::size_t n, std::string&) {
                                   const auto m = hankel_m(n);
                                   const auto inner = hankel_m(n - 2);
                                   for (std::size_t i = 0; i < n; ++i) {
                                       for (std::size_t j = 0; j < n; ++j) {
                                           IntMatrix::value_type want;
                                           if (i == n - 1 || j == n - 1) {
                                               want = 1;
                                           } else if (i == 0 || j == 0) {
                                               want = 0;
                                           } else {
                                               want = inner(i - 1, j - 1);
                                           }
                                           if (m(i, j) != want) return false;
                                       }
                                   }
                                   return true;
                               }));
    rep.checks.push_back(sweep("Q^T A(G_n) Q = M_n", 1, n_max, n_max, [](std::size_t n, std::string&) {
        return conjugate(similarity_to_hankel(n), adjacency_matrix(antiregular_connected(n))) == hankel_m(n);
    }));
    rep.checks.push_back(sweep("M_n * M_n^-1 = I", 1, n_max, n_max, [](std::size_t n, std::string&) {
        return hankel_m(n) * m_inverse(n) == IntMatrix::identity(n);
    }));
    rep.checks.push_back(sweep("D^2 = I", 1, n_max, n_max, [](std::size_t n, std::string&) {
        const auto d = sign_diag(n);
        return d * d == IntMatrix::identity(n);
    }));
    rep.checks.push_back(sweep("Y_n = D M_n^-1 D is (-1)^(n+1) on the anti-band", 1, n_max, n_max,
                               [](std::size_t n, std::string&) {
                                   const auto y = y_matrix(n);
                                   const IntMatrix::value_type s = n % 2 == 1 ? 1 : -1;
                                   for (std::size_t i = 0; i < n; ++i) {
                                       for (std::size_t j = 0; j < n; ++j) {
                                           const bool band = i + j == n - 1 || i + j + 2 == n;
                                           if (y(i, j) != (band ? s : 0)) return false;
                                       }
                                   }
                                   return true;
                               }));
    rep.checks.push_back(sweep("P^T Y_n P = (-1)^(n+1) T_n", 1, n_max, n_max, [](std::size_t n, std::string&) {
        const IntMatrix::value_type s = n % 2 == 1 ? 1 : -1;
        return x_matrix(n) == s * corner_tridiagonal(n);
    }));
    return rep;
}

SuiteReport verify_determinant(std::size_t n_max) {
    SuiteReport rep{"determinant", {}, {}};
    const auto top = std::min(n_max, kDeterminantCap);
    std::vector<mpz_class> det(top + 1);
    det[0] = 1;  // empty matrix
    for (std::size_t n = 1; n <= top; ++n) det[n] = determinant_exact(hankel_m(n));

    rep.checks.push_back(sweep("det(M_n) in {+1, -1}", 1, top, n_max,
                               [&](std::size_t n, std::string&) { return abs(det[n]) == 1; }));
    rep.checks.push_back(sweep("det(M_n) = -det(M_{n-2}) (det(M_0) = 1)", 2, top, n_max,
                               [&](std::size_t n, std::string& why) {
                                   why = "det = " + det[n].get_str() + ", det(n-2) = " + det[n - 2].get_str();
                                   return det[n] == -det[n - 2];
                               }));
    rep.checks.push_back(sweep("det(M_n) = (-1)^floor(n/2)", 1, top, n_max, [&](std::size_t n, std::string&) {
        return det[n] == det_sign_oracle_pattern(n);
    }));

    std::ostringstream pattern;
    std::ostringstream mismatch;
    bool any_mismatch = false;
    for (std::size_t n = 1; n <= std::min<std::size_t>(top, 16); ++n) {
        pattern << (n > 1 ? " " : "") << (det[n] > 0 ? '+' : '-');
    }
    for (std::size_t n = 1; n <= top; ++n) {
        if (det[n] != det_sign_odd_exponent(n)) {
            if (any_mismatch) mismatch << ',';
            mismatch << n;
            any_mismatch = true;
            if (n > 16) {
                mismatch << ",...";
                break;
            }
        }
    }
    rep.notes.push_back("sign of det(M_n), n = 1.." + std::to_string(std::min<std::size_t>(top, 16)) + ": " +
                        pattern.str());
    rep.notes.push_back(any_mismatch ? "(-1)^floor((n-1)/2) differs from the exact determinant at n = " + mismatch.str() +
                                           " (every even n); the recursion and (-1)^floor(n/2) hold"
                                     : "(-1)^floor((n-1)/2) agrees with the exact determinant on the tested range");
    return rep;
}

SuiteReport verify_spectrum(std::size_t n_max) {
    SuiteReport rep{"spectrum", {}, {}};

    {
        Worst worst;
        const auto top = std::min(n_max, kNumericCap);
        auto c = sweep("numeric vs closed form, A(G_n) (1e-10 to n=200, 1e-8 beyond; scaled by max(1,|lambda|))", 1,
                       top, n_max, [&](std::size_t n, std::string& why) {
                           const double tol = n <= 200 ? 1e-10 : 1e-8;
                           const double d = max_scaled_difference(
                               numeric_spectrum(adjacency_matrix(antiregular_connected(n)), 1e-12),
                               closed_form_spectrum_g(n));
                           worst.update(d);
                           why = "difference " + format_double(d);
                           return d <= tol;
                       });
        c.detail += "; " + worst.text();
        rep.checks.push_back(std::move(c));
    }
    {
        const auto top = std::min(n_max, kNumericCap);
        rep.checks.push_back(sweep("numeric vs closed form, A(H_n) and X_n", 1, top, n_max,
                                   [](std::size_t n, std::string& why) {
                                       const double tol = n <= 200 ? 1e-10 : 1e-8;
                                       const double dh = max_scaled_difference(
                                           numeric_spectrum(adjacency_matrix(antiregular_disconnected(n)), 1e-12),
                                           spectrum_h(n));
                                       const double dx =
                                           max_scaled_difference(numeric_spectrum(x_matrix(n), 1e-12),
                                                                 closed_form_spectrum_x(n));
                                       why = "H difference " + format_double(dh) + ", X difference " +
                                             format_double(dx);
                                       return dh <= tol && dx <= tol;
                                   }));
    }
    rep.checks.push_back(sweep("oracle roots = numeric = closed form within 1e-9", 1, std::min(n_max, kOracleCap),
                               n_max, [](std::size_t n, std::string& why) {
                                   const auto a = adjacency_matrix(antiregular_connected(n));
                                   const auto closed = closed_form_spectrum_g(n);
                                   const auto oracle = oracle_spectrum(a, 1e-12);
                                   const auto numeric = numeric_spectrum(a, 1e-12);
                                   const double d = std::max({max_abs_difference(oracle, closed),
                                                              max_abs_difference(numeric, closed),
                                                              max_abs_difference(oracle, numeric)});
                                   why = "difference " + format_double(d);
                                   return d <= 1e-9;
                               }));
    rep.checks.push_back(sweep("eigenvalues of G_n are simple (min gap > 0)", 1, n_max, n_max,
                               [](std::size_t n, std::string&) { return min_gap(closed_form_spectrum_g(n)) > 0.0; }));
    {
        double prev_margin = std::numeric_limits<double>::infinity();
        rep.checks.push_back(sweep("forbidden interval: |lambda| > 1/2, margin non-increasing; H_n allows one 0", 1,
                                   n_max, n_max, [&](std::size_t n, std::string& why) {
                                       const auto g = closed_form_spectrum_g(n);
                                       double margin = std::numeric_limits<double>::infinity();
                                       for (double v : g.values) margin = std::min(margin, std::abs(v) - 0.5);
                                       why = "margin " + format_double(margin);
                                       const bool ok = margin > 0.0 && margin <= prev_margin &&
                                                       forbidden_interval_check(g, false) &&
                                                       forbidden_interval_check(spectrum_h(n), true);
                                       prev_margin = margin;
                                       return ok;
                                   }));
    }
    rep.checks.push_back(sweep("trace: sum lambda_j = ceil(n/2) within 1e-10 n", 1, n_max, n_max,
                               [](std::size_t n, std::string& why) {
                                   double sum = 0.0;
                                   for (double v : closed_form_spectrum_g(n).values) sum += v;
                                   const double err = std::abs(sum - static_cast<double>(ceil_half(n)));
                                   why = "error " + format_double(err);
                                   return err <= 1e-10 * static_cast<double>(n);
                               }));
    rep.checks.push_back(sweep("product of lambda_j = det(M_n) within 1e-8", 1, std::min(n_max, kProductCap), n_max,
                               [](std::size_t n, std::string& why) {
                                   long double prod = 1.0L;
                                   for (double v : closed_form_spectrum_g(n).values) prod *= v;
                                   const double det = determinant_exact(hankel_m(n)).get_d();
                                   const double err = std::abs(static_cast<double>(prod) - det);
                                   why = "error " + format_double(err);
                                   return err <= 1e-8 * std::abs(det);
                               }));
    rep.checks.push_back(sweep("reciprocal duality: 1/mu_j(X_n) = lambda_j(G_n) termwise within 1e-12", 1, n_max,
                               n_max, [](std::size_t n, std::string& why) {
                                   for (std::size_t j = 1; j <= n; ++j) {
                                       const double g = g_eigenvalue(n, j);
                                       const double err = std::abs(1.0 / x_eigenvalue(n, j) - g);
                                       if (err > 1e-12 * std::max(1.0, std::abs(g))) {
                                           why = "j = " + std::to_string(j);
                                           return false;
                                       }
                                   }
                                   return true;
                               }));
    rep.checks.push_back(sweep("char poly: A(G_n) = M_n and M_n^-1 = Y_n = X_n exactly; constant term = (-1)^n det", 1,
                               std::min(n_max, kCharPolyCap), n_max, [](std::size_t n, std::string& why) {
                                   const auto pa = char_poly_exact(adjacency_matrix(antiregular_connected(n)));
                                   const auto pm = char_poly_exact(hankel_m(n));
                                   const auto pinv = char_poly_exact(m_inverse(n));
                                   const auto py = char_poly_exact(y_matrix(n));
                                   const auto px = char_poly_exact(x_matrix(n));
                                   const mpz_class sign = n % 2 == 0 ? 1 : -1;
                                   if (pm.coefficients[0] != sign * determinant_exact(hankel_m(n))) {
                                       why = "constant term mismatch";
                                       return false;
                                   }
                                   why = "char polys differ";
                                   return pa == pm && pinv == py && py == px;
                               }));
    return rep;
}

SuiteReport verify_degrees(std::size_t n_max) {
    SuiteReport rep{"degrees", {}, {}};
    rep.checks.push_back(sweep("d(G_n) = (1..n), d(H_n) = (0..n-1)", 1, n_max, n_max, [](std::size_t n, std::string&) {
        return degree_sequence(antiregular_connected(n)).sorted == iota_from(1, n) &&
               degree_sequence(antiregular_disconnected(n)).sorted == iota_from(0, n);
    }));
    rep.checks.push_back(sweep("G_n, H_n alternating, complementary, start bits n mod 2 / (n+1) mod 2", 1, n_max, n_max,
                               [](std::size_t n, std::string&) {
                                   const auto g = antiregular_connected(n);
                                   const auto h = antiregular_disconnected(n);
                                   return is_alternating(g.sequence()) && is_alternating(h.sequence()) &&
                                          g.sequence().flipped() == h.sequence() && g.sequence().bit(0) == n % 2 &&
                                          h.sequence().bit(0) == (n + 1) % 2 && complement(g) == h;
                               }));
    rep.checks.push_back(sweep("G_n connected, H_n disconnected (b_n rule and BFS agree)", 1, n_max, n_max,
                               [](std::size_t n, std::string&) {
                                   const auto g = antiregular_connected(n);
                                   const auto h = antiregular_disconnected(n);
                                   return is_connected(g) && is_connected_bfs(g) && !is_connected(h) &&
                                          !is_connected_bfs(h);
                               }));
    rep.checks.push_back(sweep("A(G) + A(complement G) = J for G_n", 1, n_max, n_max, [](std::size_t n, std::string&) {
        const auto g = antiregular_connected(n);
        return adjacency_matrix(g) + adjacency_matrix(complement(g)) == IntMatrix::all_ones(n);
    }));
    rep.checks.push_back(sweep("G_{n+1} - v_{n+1} has d = (0..n-1); H_{n+1} minus its degree-0 vertex has d = (1..n)", 1, n_max, n_max,
                               [](std::size_t n, std::string&) {
                                   auto dg = degrees_of(delete_vertex(adjacency_matrix(antiregular_connected(n + 1)), n));
                                   // Remove the minimum-degree vertex of H_{n+1}.
                                   const auto h = antiregular_disconnected(n + 1);
                                   const auto hd = degree_sequence(h).by_vertex;
                                   const auto v_min =
                                       static_cast<std::size_t>(std::min_element(hd.begin(), hd.end()) - hd.begin());
                                   auto dh = degrees_of(delete_vertex(adjacency_matrix(h), v_min));
                                   std::sort(dg.begin(), dg.end());
                                   std::sort(dh.begin(), dh.end());
                                   return dg == iota_from(0, n) && dh == iota_from(1, n);
                               }));
    rep.checks.push_back(sweep("exactly G_n and H_n have all-distinct degrees among all 2^n sequences", 1,
                               std::min(n_max, kEnumerationCap), n_max, [](std::size_t n, std::string& why) {
                                   std::vector<ThresholdGraph> found;
                                   for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                                       std::vector<std::uint8_t> bits(n);
                                       for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1U;
                                       ThresholdGraph g{BinarySequence(std::move(bits))};
                                       if (is_antiregular(g)) found.push_back(std::move(g));
                                   }
                                   why = std::to_string(found.size()) + " found";
                                   const auto g = antiregular_connected(n);
                                   const auto h = antiregular_disconnected(n);
                                   return found.size() == 2 &&
                                          ((found[0] == g && found[1] == h) || (found[0] == h && found[1] == g));
                               }));
    return rep;
}

std::vector<SuiteReport> run_suites(std::string_view suite, std::size_t n_max) {
    if (n_max == 0) throw InvalidInput("verify: n_max must be >= 1");
    std::vector<SuiteReport> out;
    const bool all = suite == "all";
    if (all || suite == "similarity") out.push_back(verify_similarity(n_max));
    if (all || suite == "determinant") out.push_back(verify_determinant(n_max));
    if (all || suite == "spectrum") out.push_back(verify_spectrum(n_max));
    if (all || suite == "degrees") out.push_back(verify_degrees(n_max));
    if (out.empty()) throw InvalidInput("verify: unknown suite '" + std::string(suite) + "'");
    return out;
}

}  // namespace antireg
