#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "antireg/int_matrix.hpp"
#include "antireg/spectrum.hpp"

namespace antireg {

/// det(xI - A) with exact integer coefficients; coefficients[k] multiplies x^k.
struct CharPoly {
    std::vector<mpz_class> coefficients;

    std::size_t degree() const noexcept { return coefficients.size() - 1; }
    /// Exact sign of p at the dyadic rational num / 2^shift.
    int sign_at(const mpz_class& num, unsigned long shift) const;
    double evaluate(double x) const;
    /// "x^3 - 2x^2 - x + 1"
    std::string to_string() const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Faddeev-LeVerrier: N_k = A N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A N_k) / k.
/// Every division is exact over the integers.
CharPoly char_poly_faddeev_leverrier(const IntMatrix& a);

/// Three-term recurrence p_k = (x - a_kk) p_{k-1} - a_{k,k-1} a_{k-1,k} p_{k-2}.
/// Throws InvalidInput unless `a` is tridiagonal.
CharPoly char_poly_tridiagonal(const IntMatrix& a);

bool is_tridiagonal(const IntMatrix& a);

/// Dispatches to the three-term recurrence for tridiagonal input and to
/// Faddeev-LeVerrier otherwise.
CharPoly char_poly_exact(const IntMatrix& a);

/// All real roots of a real-rooted polynomial with simple roots.
///
/// Roots are isolated with an exact Sturm sequence (rational arithmetic) and
/// then refined by exact-sign bisection on dyadic rationals until each bracket
/// is narrower than `precision`. Throws NumericFailure if the polynomial does
/// not have `degree()` distinct real roots.
Spectrum real_roots(const CharPoly& p, double precision = 1e-12);

/// real_roots(char_poly_exact(a)).
Spectrum oracle_spectrum(const IntMatrix& a, double precision = 1e-12);

}  // namespace antireg
