#pragma once

#include <cstddef>
#include <vector>

#include "antireg/int_matrix.hpp"

namespace antireg {

/// Bijection sigma on {0, ..., n-1}. The 1-based helpers translate to the
/// {1, ..., n} labelling used in human-facing output.
///
/// Matrix convention: P(i,j) = 1 iff j = sigma(i), so (Px)_i = x_{sigma(i)}.
class Permutation {
public:
    /// Throws InvalidInput unless `images` is a permutation of 0..n-1, n >= 1.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    static Permutation from_one_based(const std::vector<std::size_t>& images);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::vector<std::size_t> one_based() const;

    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;

    IntMatrix matrix() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// P^T A P for the matrix P of `p`, computed by reindexing:
/// (P^T A P)(i,j) = A(p^{-1}(i), p^{-1}(j)). Throws InvalidInput on size mismatch.
IntMatrix conjugate(const Permutation& p, const IntMatrix& a);

}  // namespace antireg
