#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace antireg {

/// Dense square matrix of exact 64-bit integers, row-major.
/// Arithmetic is overflow-checked; an overflow throws InvariantViolation.
class IntMatrix {
public:
    using value_type = std::int64_t;

    /// n x n zero matrix, n >= 1.
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix all_ones(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    value_type operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
    value_type& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

    std::span<const value_type> row(std::size_t i) const {
        return {data_.data() + i * n_, n_};
    }
    std::span<const value_type> entries() const noexcept { return data_; }

    IntMatrix transpose() const;
    bool is_symmetric() const;
    value_type trace() const;
    /// Max row sum of absolute values.
    value_type norm_inf() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<value_type> data_;
};

/// Exact product. Zero entries on either side are skipped, so the cost tracks
/// the number of nonzeros rather than n^3 for the sparse matrices used here.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(IntMatrix::value_type s, const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace antireg
