#include "antireg/permutation.hpp"

#include "antireg/error.hpp"

namespace antireg {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    const auto n = images_.size();
    if (n == 0) throw InvalidInput("Permutation: size must be >= 1");
    std::vector<bool> hit(n, false);
    for (auto v : images_) {
        if (v >= n || hit[v]) throw InvalidInput("Permutation: images are not a bijection");
        hit[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
    std::vector<std::size_t> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] == 0) throw InvalidInput("Permutation: one-based image 0");
        zero[i] = images[i] - 1;
    }
    return Permutation(std::move(zero));
}

std::vector<std::size_t> Permutation::one_based() const {
    auto out = images_;
    for (auto& v : out) ++v;
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw InvalidInput("Permutation::compose: size mismatch");
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
    return Permutation(std::move(out));
}

IntMatrix Permutation::matrix() const {
    IntMatrix p(size());
    for (std::size_t i = 0; i < size(); ++i) p(i, images_[i]) = 1;
    return p;
}

IntMatrix conjugate(const Permutation& p, const IntMatrix& a) {
    if (p.size() != a.size()) throw InvalidInput("conjugate: permutation and matrix sizes differ");
    const auto n = a.size();
    IntMatrix out(n);
    // P(k,i) = 1 iff i = p(k), so (P^T A P)(p(k), p(l)) = A(k, l).
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) out(p(k), p(l)) = a(k, l);
    }
    return out;
}

}  // namespace antireg
