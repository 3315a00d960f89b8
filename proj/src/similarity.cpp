#include "antireg/similarity.hpp"

#include <string>

#include "antireg/error.hpp"
#include "antireg/graph.hpp"

namespace antireg {
namespace {

void require_positive(std::size_t n, const char* what) {
    if (n == 0) throw InvalidInput(std::string(what) + ": n must be >= 1");
}

IntMatrix::value_type alternating_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

IntMatrix hankel_m(std::size_t n) {
    require_positive(n, "hankel_m");
    IntMatrix m(n);
    // 0-based: i + j >= n - 1.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1 - i; j < n; ++j) m(i, j) = 1;
    }
    return m;
}

Permutation similarity_to_hankel(std::size_t n) {
    require_positive(n, "similarity_to_hankel");
    // order[i] is the G_n vertex that sits in Hankel row i.
    std::vector<std::size_t> prev{0};     // order for G_1
    std::vector<std::size_t> cur{0, 1};   // order for G_2
    if (n == 1) cur = prev;
    for (std::size_t m = 2; m < n; ++m) {
        // G_{m+1} = (G_{m-1} + isolated v_m) + dominating v_{m+1}.
        std::vector<std::size_t> next;
        next.reserve(m + 1);
        next.push_back(m - 1);
        next.insert(next.end(), prev.begin(), prev.end());
        next.push_back(m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[cur[i]] = i;
    Permutation q(std::move(images));

    if (conjugate(q, adjacency_matrix(antiregular_connected(n))) != hankel_m(n)) {
        throw InvariantViolation("similarity_to_hankel: Q^T A(G_n) Q != M_n for n = " + std::to_string(n));
    }
    return q;
}

IntMatrix m_inverse(std::size_t n) {
    require_positive(n, "m_inverse");
    IntMatrix m(n);
    // 0-based: +1 on i + j = n - 1, -1 on i + j = n - 2.
    for (std::size_t i = 0; i < n; ++i) {
        m(i, n - 1 - i) = 1;
        if (i + 2 <= n) m(i, n - 2 - i) = -1;
    }
    return m;
}

IntMatrix sign_diag(std::size_t n) {
    require_positive(n, "sign_diag");
    IntMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = alternating_sign(i);
    return d;
}

IntMatrix y_matrix(std::size_t n) {
    const auto d = sign_diag(n);
    return d * m_inverse(n) * d;
}

Permutation permutation_sigma(std::size_t n) {
    require_positive(n, "permutation_sigma");
    std::vector<std::size_t> one_based(n);
    if (n % 2 == 0) {
        const auto half = n / 2;
        for (std::size_t k = 1; k <= half; ++k) one_based[k - 1] = 2 * k;
        for (std::size_t j = 1; j <= half; ++j) one_based[half + j - 1] = n - (2 * j - 1);
    } else {
        const auto mid = (n + 1) / 2;
        for (std::size_t k = 1; k < mid; ++k) one_based[k - 1] = 2 * k;
        one_based[mid - 1] = n;
        for (std::size_t j = 1; mid + j <= n; ++j) one_based[mid + j - 1] = n - 2 * j;
    }
    return Permutation::from_one_based(one_based);
}

IntMatrix corner_tridiagonal(std::size_t n) {
    require_positive(n, "corner_tridiagonal");
    IntMatrix t(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        t(i, i + 1) = 1;
        t(i + 1, i) = 1;
    }
    t(n - 1, n - 1) = 1;
    return t;
}

IntMatrix x_matrix(std::size_t n) {
    const auto p = permutation_sigma(n).matrix();
    auto x = p.transpose() * y_matrix(n) * p;
    if (x != alternating_sign(n + 1) * corner_tridiagonal(n)) {
        throw InvariantViolation("x_matrix: P^T Y_n P != (-1)^(n+1) T_n for n = " + std::to_string(n));
    }
    return x;
}

}  // namespace antireg
