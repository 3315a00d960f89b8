#include "antireg/determinant.hpp"

#include <utility>
#include <vector>

namespace antireg {

mpz_class determinant_exact(const IntMatrix& a) {
    const auto n = a.size();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));
    }

    int sign = 1;
    mpz_class prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Sylvester's identity guarantees the division is exact.
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
        }
        prev_pivot = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace antireg
