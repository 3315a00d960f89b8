#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace antireg {

enum class Method { closed_form, numeric, oracle };

std::string_view to_string(Method m) noexcept;

/// Eigenvalues sorted ascending, tagged with how they were obtained.
/// `tolerance` is 0 for closed-form values and the absolute accuracy bound otherwise.
struct Spectrum {
    std::vector<double> values;
    Method method = Method::closed_form;
    double tolerance = 0.0;

    std::size_t size() const noexcept { return values.size(); }
};

/// lambda_j(G_n) = (-1)^{n+1} / (2 cos((2j-1) pi / (2n+1))), j = 1..n, unsorted index j.
/// Evaluated in extended precision and rounded once, so rational values (1, -1) are exact.
double g_eigenvalue(std::size_t n, std::size_t j);

/// mu_j(X_n) = -2 (-1)^n cos((2j-1) pi / (2n+1)), j = 1..n.
double x_eigenvalue(std::size_t n, std::size_t j);

/// Spectrum of A(G_n). Throws InvalidInput for n = 0.
Spectrum closed_form_spectrum_g(std::size_t n);

/// Spectrum of X_n. Throws InvalidInput for n = 0.
Spectrum closed_form_spectrum_x(std::size_t n);

/// Spectrum of A(H_n) = {0} together with the spectrum of G_{n-1} (empty for n = 1).
Spectrum spectrum_h(std::size_t n);

/// True iff every value has |lambda| >= 1/2, except that one value with
/// |lambda| <= zero_tolerance is tolerated when allow_zero is set.
bool forbidden_interval_check(const Spectrum& s, bool allow_zero, double zero_tolerance = 0.0);

/// Largest |a_i - b_i| over sorted values. Throws InvalidInput on length mismatch.
double max_abs_difference(const Spectrum& a, const Spectrum& b);

/// Largest |a_i - b_i| / max(1, |b_i|). Eigenvalues of G_n grow roughly linearly
/// in n, so agreement is judged relative to magnitude once |lambda| > 1.
double max_scaled_difference(const Spectrum& a, const Spectrum& b);

/// Smallest gap between consecutive sorted values (infinity for a single value).
double min_gap(const Spectrum& s);

}  // namespace antireg
