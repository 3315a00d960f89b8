#include "antireg/int_matrix.hpp"

#include <algorithm>
#include <ostream>

#include "antireg/error.hpp"

namespace antireg {
namespace {

using V = IntMatrix::value_type;

V checked_mul(V a, V b) {
    V r;
    if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("IntMatrix: integer overflow in product");
    return r;
}

V checked_add(V a, V b) {
    V r;
    if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("IntMatrix: integer overflow in sum");
    return r;
}

void require_same_size(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size()) throw InvalidInput("IntMatrix: dimension mismatch");
}

}  // namespace

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {
    if (n == 0) throw InvalidInput("IntMatrix: dimension must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != n_) throw InvalidInput("IntMatrix: rows must form a square matrix");
        std::size_t j = 0;
        for (auto v : r) (*this)(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
    IntMatrix m(n);
    std::fill(m.data_.begin(), m.data_.end(), 1);
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

IntMatrix::value_type IntMatrix::trace() const {
    value_type t = 0;
    for (std::size_t i = 0; i < n_; ++i) t = checked_add(t, (*this)(i, i));
    return t;
}

IntMatrix::value_type IntMatrix::norm_inf() const {
    value_type best = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        value_type s = 0;
        for (auto v : row(i)) s = checked_add(s, v < 0 ? -v : v);
        best = std::max(best, s);
    }
    return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require_same_size(a, b);
    const auto n = a.size();
    // Column indices of the nonzeros in each row of b.
    std::vector<std::vector<std::size_t>> b_nz(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (b(k, j) != 0) b_nz[k].push_back(j);
        }
    }
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto aik = a(i, k);
            if (aik == 0) continue;
            for (auto j : b_nz[k]) c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
        }
    }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_size(a, b);
    const auto n = a.size();
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) c(i, j) = checked_add(a(i, j), b(i, j));
    }
    return c;
}

IntMatrix operator*(IntMatrix::value_type s, const IntMatrix& a) {
    const auto n = a.size();
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) c(i, j) = checked_mul(s, a(i, j));
    }
    return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

}  // namespace antireg
