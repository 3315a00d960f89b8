#include "antireg/char_poly.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "antireg/error.hpp"

namespace antireg {
namespace {

using Poly = std::vector<mpz_class>;  // coefficient of x^k at index k
using QPoly = std::vector<mpq_class>;

int sign(const mpz_class& v) { return sgn(v); }

// Exact sign of p(u / v) for v > 0: sign of sum_k c_k u^k v^(d-k).
int sign_at_rational(const Poly& p, const mpz_class& u, const mpz_class& v) {
    const auto d = p.size() - 1;
    mpz_class acc = p[d];
    mpz_class vpow = 1;
    for (std::size_t k = d; k-- > 0;) {
        vpow *= v;
        acc = acc * u + p[k] * vpow;
    }
    return sign(acc);
}

void trim(QPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Scale a rational polynomial by a positive factor to a primitive integer one.
Poly to_primitive_integer(const QPoly& q) {
    mpz_class den = 1;
    for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Poly out(q.size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = q[i].get_num() * (den / q[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1) {
        for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

QPoly to_rational(const Poly& p) {
    QPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i];
    return q;
}

QPoly remainder(QPoly num, const QPoly& den) {
    const auto dd = den.size() - 1;
    if (dd == 0) return QPoly{0};
    trim(num);
    while (num.size() > dd) {
        const mpq_class factor = num.back() / den.back();
        const auto shift = num.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) num[i + shift] -= factor * den[i];
        num.pop_back();
        trim(num);
    }
    return num;
}

class SturmChain {
public:
    explicit SturmChain(const Poly& p) {
        chain_.push_back(p);
        Poly dp(p.size() > 1 ? p.size() - 1 : 1, 0);
        for (std::size_t k = 1; k < p.size(); ++k) dp[k - 1] = p[k] * static_cast<unsigned long>(k);
        chain_.push_back(dp);
        while (chain_.back().size() > 1) {
            auto r = remainder(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back()));
            if (r.size() == 1 && r[0] == 0) break;
            for (auto& c : r) c = -c;
            chain_.push_back(to_primitive_integer(r));
        }
    }

    // Sign variations of the chain at u / v.
    int variations(const mpz_class& u, const mpz_class& v) const {
        int count = 0;
        int last = 0;
        for (const auto& q : chain_) {
            const int s = sign_at_rational(q, u, v);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int variations(const mpq_class& x) const { return variations(x.get_num(), x.get_den()); }

private:
    std::vector<Poly> chain_;
};

void isolate(const SturmChain& sturm, const mpq_class& lo, const mpq_class& hi, int count, const mpq_class& width,
             std::vector<double>& roots) {
    if (count <= 0) return;
    if (count == 1 && hi - lo < width) {
        roots.push_back(mpq_class((lo + hi) / 2).get_d());
        return;
    }
    const mpq_class mid = (lo + hi) / 2;
    const int left = sturm.variations(lo) - sturm.variations(mid);
    isolate(sturm, lo, mid, left, width, roots);
    isolate(sturm, mid, hi, count - left, width, roots);
}

}  // namespace

int CharPoly::sign_at(const mpz_class& num, unsigned long shift) const {
    mpz_class den = 1;
    den <<= shift;
    return sign_at_rational(coefficients, num, den);
}

double CharPoly::evaluate(double x) const {
    double acc = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * x + coefficients[k].get_d();
    return acc;
}

std::string CharPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coefficients.size(); k-- > 0;) {
        const auto& c = coefficients[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

CharPoly char_poly_faddeev_leverrier(const IntMatrix& a) {
    const auto n = a.size();
    using Dense = std::vector<mpz_class>;
    Poly c(n + 1);
    c[n] = 1;

    // an holds A * N_{k-1}; N_0 = 0.
    Dense an(n * n, 0);
    Dense next(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        // N_k = A N_{k-1} + c_{n-k+1} I
        Dense nk = an;
        for (std::size_t i = 0; i < n; ++i) nk[i * n + i] += c[n - k + 1];
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                const auto ail = a(i, l);
                if (ail == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& v = nk[l * n + j];
                    if (v == 0) continue;
                    if (ail == 1) {
                        next[i * n + j] += v;
                    } else if (ail == -1) {
                        next[i * n + j] -= v;
                    } else {
                        next[i * n + j] += v * static_cast<long>(ail);
                    }
                }
            }
        }
        std::swap(an, next);
        mpz_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += an[i * n + i];
        if (tr % static_cast<unsigned long>(k) != 0) {
            throw InvariantViolation("Faddeev-LeVerrier: inexact division by k");
        }
        c[n - k] = -tr / static_cast<unsigned long>(k);
    }
    return CharPoly{std::move(c)};
}

bool is_tridiagonal(const IntMatrix& a) {
    const auto n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto dist = i > j ? i - j : j - i;
            if (dist > 1 && a(i, j) != 0) return false;
        }
    }
    return true;
}

CharPoly char_poly_tridiagonal(const IntMatrix& a) {
    if (!is_tridiagonal(a)) throw InvalidInput("char_poly_tridiagonal: matrix is not tridiagonal");
    const auto n = a.size();
    Poly older{1};                                              // p_{k-2}
    Poly old{-mpz_class(static_cast<long>(a(0, 0))), 1};        // p_{k-1}
    if (n == 1) return CharPoly{old};
    for (std::size_t k = 1; k < n; ++k) {
        const mpz_class diag = static_cast<long>(a(k, k));
        const mpz_class off = mpz_class(static_cast<long>(a(k, k - 1))) * static_cast<long>(a(k - 1, k));
        Poly cur(k + 2, 0);
        for (std::size_t i = 0; i < old.size(); ++i) {
            cur[i + 1] += old[i];
            cur[i] -= diag * old[i];
        }
        for (std::size_t i = 0; i < older.size(); ++i) cur[i] -= off * older[i];
        older = std::move(old);
        old = std::move(cur);
    }
    return CharPoly{std::move(old)};
}

CharPoly char_poly_exact(const IntMatrix& a) {
    return is_tridiagonal(a) ? char_poly_tridiagonal(a) : char_poly_faddeev_leverrier(a);
}

Spectrum real_roots(const CharPoly& p, double precision) {
    if (!(precision > 0.0)) throw InvalidInput("real_roots: precision must be positive");
    const auto d = p.degree();
    if (d == 0) return Spectrum{{}, Method::oracle, precision};

    // Cauchy bound: every root satisfies |x| < 1 + max |c_k / c_d|.
    mpq_class bound = 0;
    for (std::size_t k = 0; k < d; ++k) {
        mpq_class ratio(abs(p.coefficients[k]), abs(p.coefficients[d]));
        ratio.canonicalize();
        if (ratio > bound) bound = ratio;
    }
    bound += 1;

    const SturmChain sturm(p.coefficients);
    const mpq_class lo = -bound;
    const mpq_class hi = bound;
    const int total = sturm.variations(lo) - sturm.variations(hi);
    if (total != static_cast<int>(d)) {
        throw NumericFailure("real_roots: expected " + std::to_string(d) + " distinct real roots, found " +
                             std::to_string(total));
    }

    mpq_class width(precision);
    std::vector<double> roots;
    roots.reserve(d);
    isolate(sturm, lo, hi, total, width, roots);
    return Spectrum{std::move(roots), Method::oracle, precision};
}

Spectrum oracle_spectrum(const IntMatrix& a, double precision) {
    return real_roots(char_poly_exact(a), precision);
}

}  // namespace antireg
