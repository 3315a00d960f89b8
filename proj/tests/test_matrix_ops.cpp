#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "antireg/determinant.hpp"
#include "antireg/error.hpp"
#include "antireg/graph.hpp"
#include "antireg/permutation.hpp"
#include "antireg/similarity.hpp"

using namespace antireg;

namespace {

// Cofactor expansion along the first row; exponential, only for n <= 7.
mpz_class laplace_determinant(const IntMatrix& a) {
    const auto n = a.size();
    if (n == 1) return static_cast<long>(a(0, 0));
    mpz_class total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a(0, col) == 0) continue;
        IntMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, c = 0; j < n; ++j) {
                if (j != col) minor(i - 1, c++) = a(i, j);
            }
        }
        const mpz_class term = laplace_determinant(minor) * static_cast<long>(a(0, col));
        total += col % 2 == 0 ? term : mpz_class(-term);
    }
    return total;
}

// Every permutation q with (explicit P^T) A P = target, P(i,j) = 1 iff j = q(i).
std::vector<Permutation> all_similarities(const IntMatrix& a, const IntMatrix& target) {
    std::vector<std::size_t> images(a.size());
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        const Permutation q(images);
        const auto p = q.matrix();
        if (p.transpose() * a * p == target) out.push_back(q);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int spread) {
    IntMatrix m(n);
    std::uniform_int_distribution<int> dist(-spread, spread);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    }
    return m;
}

}  // namespace

TEST_CASE("IntMatrix basics") {
    CHECK_THROWS_AS(IntMatrix(0), InvalidInput);
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), InvalidInput);
    const IntMatrix a{{1, 2}, {3, 4}};
    CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a * a == IntMatrix{{7, 10}, {15, 22}});
    CHECK(a.trace() == 5);
    CHECK(a.norm_inf() == 7);
    CHECK_FALSE(a.is_symmetric());
    CHECK_THROWS_AS(a * IntMatrix(3), InvalidInput);
    IntMatrix big{{INT64_MAX / 2 + 1}};
    CHECK_THROWS_AS(big * big, InvariantViolation);
}

TEST_CASE("sparse-aware product matches the textbook triple loop") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = 1 + rng() % 12;
        const auto a = random_matrix(rng, n, 2);
        const auto b = random_matrix(rng, n, 2);
        IntMatrix want(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) want(i, j) += a(i, k) * b(k, j);
            }
        }
        CHECK(a * b == want);
    }
}

TEST_CASE("Permutation") {
    CHECK_THROWS_AS(Permutation({0, 0}), InvalidInput);
    CHECK_THROWS_AS(Permutation({}), InvalidInput);
    const auto p = Permutation::from_one_based({2, 4, 3, 1});
    CHECK(p.one_based() == std::vector<std::size_t>{2, 4, 3, 1});
    CHECK(p.compose(p.inverse()) == Permutation::identity(4));
    CHECK(p.matrix() * p.matrix().transpose() == IntMatrix::identity(4));
    // (Px)_i = x_{sigma(i)}
    const auto m = p.matrix();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) CHECK(m(i, j) == (j == p(i) ? 1 : 0));
    }
}

TEST_CASE("conjugate") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = 1 + rng() % 9;
        const auto a = random_matrix(rng, n, 3);
        std::vector<std::size_t> images(n);
        std::iota(images.begin(), images.end(), 0);
        std::shuffle(images.begin(), images.end(), rng);
        const Permutation p(images);
        const auto pm = p.matrix();
        const auto c = conjugate(p, a);
        CHECK(c == pm.transpose() * a * pm);
        CHECK(conjugate(p.inverse(), c) == a);
        CHECK(conjugate(Permutation::identity(n), a) == a);
        auto e1 = std::vector<std::int64_t>(a.entries().begin(), a.entries().end());
        auto e2 = std::vector<std::int64_t>(c.entries().begin(), c.entries().end());
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        CHECK(e1 == e2);
    }
    CHECK_THROWS_AS(conjugate(Permutation::identity(2), IntMatrix(3)), InvalidInput);
}

TEST_CASE("hankel_m") {
    CHECK(hankel_m(1) == IntMatrix{{1}});
    CHECK(hankel_m(2) == IntMatrix{{0, 1}, {1, 1}});
    CHECK(hankel_m(3) == IntMatrix{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK_THROWS_AS(hankel_m(0), InvalidInput);
}

TEST_CASE("similarity_to_hankel") {
    CHECK(similarity_to_hankel(1) == Permutation::identity(1));
    CHECK(similarity_to_hankel(2) == Permutation::identity(2));
    CHECK(adjacency_matrix(antiregular_connected(2)) == hankel_m(2));
    CHECK_THROWS_AS(similarity_to_hankel(0), InvalidInput);

    SUBCASE("recursive construction is one of the exhaustively found similarities, n <= 7") {
        for (std::size_t n = 1; n <= 7; ++n) {
            CAPTURE(n);
            const auto found = all_similarities(adjacency_matrix(antiregular_connected(n)), hankel_m(n));
            REQUIRE_FALSE(found.empty());
            const auto q = similarity_to_hankel(n);
            CHECK(std::find(found.begin(), found.end(), q) != found.end());
        }
    }
    SUBCASE("n = 4 explicitly") {
        const auto q = similarity_to_hankel(4);
        const auto pm = q.matrix();
        CHECK(pm.transpose() * adjacency_matrix(antiregular_connected(4)) * pm == hankel_m(4));
    }
    SUBCASE("n <= 256") {
        for (std::size_t n = 1; n <= 256; ++n) {
            REQUIRE(conjugate(similarity_to_hankel(n), adjacency_matrix(antiregular_connected(n))) == hankel_m(n));
        }
    }
}

TEST_CASE("m_inverse") {
    CHECK(m_inverse(1) == IntMatrix{{1}});
    CHECK(m_inverse(2) == IntMatrix{{-1, 1}, {1, 0}});
    CHECK(m_inverse(3) == IntMatrix{{0, -1, 1}, {-1, 1, 0}, {1, 0, 0}});
    for (std::size_t n = 1; n <= 512; n += (n < 64 ? 1 : 37)) {
        CAPTURE(n);
        REQUIRE(hankel_m(n) * m_inverse(n) == IntMatrix::identity(n));
        REQUIRE(m_inverse(n) * hankel_m(n) == IntMatrix::identity(n));
    }
    CHECK(hankel_m(512) * m_inverse(512) == IntMatrix::identity(512));
}

TEST_CASE("sign_diag") {
    CHECK(sign_diag(1) == IntMatrix{{1}});
    CHECK(sign_diag(3) == IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
    for (std::size_t n = 1; n <= 100; ++n) REQUIRE(sign_diag(n) * sign_diag(n) == IntMatrix::identity(n));
}

TEST_CASE("y_matrix") {
    CHECK(y_matrix(1) == IntMatrix{{1}});
    CHECK(y_matrix(2) == IntMatrix{{-1, -1}, {-1, 0}});
    CHECK(y_matrix(3) == IntMatrix{{0, 1, 1}, {1, 1, 0}, {1, 0, 0}});
    for (std::size_t n = 1; n <= 64; ++n) {
        const auto d = sign_diag(n);
        const auto mi = m_inverse(n);
        const auto y = y_matrix(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE(y(i, j) == ((i + j) % 2 == 0 ? 1 : -1) * mi(i, j));
            }
        }
        REQUIRE(y == d * mi * d);
    }
}

TEST_CASE("permutation_sigma") {
    CHECK(permutation_sigma(4).one_based() == std::vector<std::size_t>{2, 4, 3, 1});
    CHECK(permutation_sigma(5).one_based() == std::vector<std::size_t>{2, 4, 5, 3, 1});
    CHECK(permutation_sigma(1) == Permutation::identity(1));
    for (std::size_t n = 1; n <= 10000; ++n) {
        // The Permutation constructor rejects anything that is not a bijection.
        REQUIRE_NOTHROW(permutation_sigma(n));
    }
}

TEST_CASE("x_matrix") {
    CHECK(x_matrix(1) == IntMatrix{{1}});
    CHECK(x_matrix(2) == IntMatrix{{0, -1}, {-1, -1}});
    CHECK(x_matrix(3) == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(corner_tridiagonal(3) == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    for (std::size_t n = 1; n <= 256; ++n) {
        // Independent route: explicit permutation matrices instead of the product inside x_matrix.
        const auto p = permutation_sigma(n).matrix();
        const IntMatrix::value_type s = n % 2 == 1 ? 1 : -1;
        REQUIRE(p.transpose() * y_matrix(n) * p == s * corner_tridiagonal(n));
        REQUIRE(x_matrix(n) == s * corner_tridiagonal(n));
    }
}

TEST_CASE("determinant_exact") {
    CHECK(determinant_exact(hankel_m(1)) == 1);
    CHECK(determinant_exact(hankel_m(3)) == -1);
    CHECK(laplace_determinant(hankel_m(3)) == -1);
    CHECK(determinant_exact(IntMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(determinant_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);

    SUBCASE("agrees with cofactor expansion on random matrices") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 200; ++trial) {
            const auto n = 1 + rng() % 7;
            const auto a = random_matrix(rng, n, trial % 2 ? 1 : 9);
            REQUIRE(determinant_exact(a) == laplace_determinant(a));
        }
    }
    SUBCASE("recursion det(M_n) = -det(M_{n-2}), 3 <= n <= 16, and the sign pattern") {
        for (std::size_t n = 3; n <= 16; ++n) {
            CAPTURE(n);
            REQUIRE(determinant_exact(hankel_m(n)) == -determinant_exact(hankel_m(n - 2)));
            if (n <= 7) REQUIRE(laplace_determinant(hankel_m(n)) == determinant_exact(hankel_m(n)));
        }
        // det(M_0) = 1 keeps the recursion valid at n = 2.
        CHECK(determinant_exact(hankel_m(2)) == -1);
        // Oracle sign pattern (-1)^floor(n/2); (-1)^floor((n-1)/2) is off at every even n.
        for (std::size_t n = 1; n <= 16; ++n) {
            const int oracle = (n / 2) % 2 == 0 ? 1 : -1;
            const int odd_exponent = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
            CHECK(determinant_exact(hankel_m(n)) == oracle);
            CHECK((oracle == odd_exponent) == (n % 2 == 1));
        }
    }
    SUBCASE("big entries do not overflow") {
        const IntMatrix a{{INT64_MAX, 1}, {1, INT64_MAX}};
        mpz_class m = INT64_MAX;
        CHECK(determinant_exact(a) == m * m - 1);
    }
}
