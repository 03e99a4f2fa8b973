#ifndef MAXMOD_POLYNOMIAL_HPP
#define MAXMOD_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maxmod {

using Complex = std::complex<double>;

/// Relative threshold below which trailing coefficients are trimmed on
/// construction (2^-40).  A coefficient survives iff |a_j| > tol * max|a_i|.
inline constexpr double kCoeffTrimTol = 9.094947017729282e-13;

/// Default relative threshold for classifying coefficients as structural
/// zeros when detecting gap structure.  Looser than kCoeffTrimTol because
/// root-product expansion leaves rounding dust in interior coefficients.
inline constexpr double kLacunaryZeroTol = 1e-12;

/// Dense polynomial p(z) = sum_j a_j z^j over complex coefficients.
/// Invariant: the coefficient vector is non-empty and the leading
/// coefficient has modulus > 0, so degree() == coeffs().size() - 1 exactly.
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::domain_error("Polynomial: empty coefficient vector");
        double max_abs = 0.0;
        for (const Complex& c : coeffs_) max_abs = std::max(max_abs, std::abs(c));
        if (max_abs == 0.0)
            throw std::domain_error("Polynomial: all coefficients are zero");
        const double cutoff = kCoeffTrimTol * max_abs;
        while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= cutoff)
            coeffs_.pop_back();
        if (std::abs(coeffs_.back()) <= cutoff)
            throw std::domain_error("Polynomial: no coefficient above trim threshold");
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    const Complex& coeff(std::size_t j) const { return coeffs_[j]; }
    const Complex& leading() const { return coeffs_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation of p(z).
inline Complex evaluate(const Polynomial& p, Complex z) {
    const auto& a = p.coeffs();
    Complex acc = a.back();
    for (std::size_t j = a.size() - 1; j-- > 0;) acc = acc * z + a[j];
    return acc;
}

/// Fused Horner pass returning {p(z), p'(z)}.
inline std::pair<Complex, Complex> evaluate_with_derivative(const Polynomial& p, Complex z) {
    const auto& a = p.coeffs();
    Complex b = a.back();
    Complex d = 0.0;
    for (std::size_t j = a.size() - 1; j-- > 0;) {
        d = d * z + b;
        b = b * z + a[j];
    }
    return {b, d};
}

/// Coefficient of z^j in p' is (j+1) a_{j+1}.  Degree-zero input has no
/// representable derivative (the zero polynomial violates the leading
/// coefficient invariant).
inline Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0)
        throw std::domain_error("derivative: degree-zero polynomial");
    std::vector<Complex> out(p.coeffs().size() - 1);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = static_cast<double>(j + 1) * p.coeff(j + 1);
    return Polynomial(std::move(out));
}

/// Coefficientwise sum.  Test support; throws if the sum trims to zero.
inline Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<Complex> out(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) out[j] += p.coeff(j);
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) out[j] += q.coeff(j);
    return Polynomial(std::move(out));
}

/// Scalar multiple c * p, c != 0.
inline Polynomial scale(const Polynomial& p, Complex c) {
    if (std::abs(c) == 0.0)
        throw std::domain_error("scale: zero multiplier");
    std::vector<Complex> out = p.coeffs();
    for (Complex& a : out) a *= c;
    return Polynomial(std::move(out));
}

/// sum_j |a_j| r^j; the trivial magnitude bound for |p| on the circle |z| = r.
inline double coeff_abs_sum(const Polynomial& p, double r) {
    double acc = 0.0;
    double rj = 1.0;
    for (const Complex& a : p.coeffs()) {
        acc += std::abs(a) * rj;
        rj *= r;
    }
    return acc;
}

namespace detail {

inline std::vector<Complex> convolve(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace detail

/// leading * prod_k (z - r_k), expanded by multiplying factors pairwise in a
/// balanced binary tree.  Pairwise products keep error growth logarithmic in
/// the number of factors, which matters for clustered roots.
inline Polynomial from_roots(Complex leading, std::span<const Complex> roots) {
    if (std::abs(leading) == 0.0)
        throw std::domain_error("from_roots: zero leading coefficient");
    std::vector<std::vector<Complex>> layer;
    layer.reserve(roots.size());
    for (const Complex& r : roots) layer.push_back({-r, Complex(1.0)});
    while (layer.size() > 1) {
        std::vector<std::vector<Complex>> next;
        next.reserve((layer.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2)
            next.push_back(detail::convolve(layer[i], layer[i + 1]));
        if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
        layer = std::move(next);
    }
    std::vector<Complex> coeffs = layer.empty() ? std::vector<Complex>{Complex(1.0)}
                                                : std::move(layer.front());
    for (Complex& c : coeffs) c *= leading;
    return Polynomial(std::move(coeffs));
}

inline Polynomial from_roots(Complex leading, std::initializer_list<Complex> roots) {
    return from_roots(leading, std::span<const Complex>(roots.begin(), roots.size()));
}

/// Structural descriptor of p(z) = z^m [a_{n-m} z^{n-m} + sum_{j>=mu} ...]:
/// degree n, an m-fold zero at the origin, and a coefficient gap of width mu
/// directly below the top of the bracket factor.  K is the radius of the
/// circle carrying the remaining zeros; it is supplied by the caller or a
/// generator, never recovered from the coefficients.
struct LacunaryProfile {
    int n = 0;
    int m = 0;
    int mu = 1;
    double K = 1.0;

    bool valid() const {
        return m >= 0 && m <= n - 1 && mu >= 1 && mu <= n - m && K > 0.0 && K <= 1.0;
    }
};

/// Detects (n, m, mu) from the coefficient support.  m is the smallest index
/// whose coefficient exceeds zero_tol * max|a_j|; mu is the maximal gap
/// consistent with the support (callers may use any smaller mu >= 1).
/// Returns nullopt for pure monomials a z^n, whose bracket factor has no
/// coefficient below the top.
inline std::optional<LacunaryProfile> lacunary_profile(const Polynomial& p,
                                                       double zero_tol = kLacunaryZeroTol) {
    if (zero_tol < 0.0)
        throw std::domain_error("lacunary_profile: negative tolerance");
    const auto& a = p.coeffs();
    double max_abs = 0.0;
    for (const Complex& c : a) max_abs = std::max(max_abs, std::abs(c));
    const double cutoff = zero_tol * max_abs;

    const int n = p.degree();
    int m = 0;
    while (m <= n && std::abs(a[m]) <= cutoff) ++m;
    if (m >= n) return std::nullopt; // pure monomial: bracket has no lower terms

    // Largest bracket index below the top with a nonzero coefficient.
    // Bracket coefficient j corresponds to a_{m+j}.
    int j_top = n - m;
    int j = j_top - 1;
    while (j >= 0 && std::abs(a[m + j]) <= cutoff) --j;
    if (j < 0) return std::nullopt; // unreachable given a_m above cutoff

    LacunaryProfile prof;
    prof.n = n;
    prof.m = m;
    prof.mu = j_top - j;
    prof.K = 1.0;
    return prof;
}

} // namespace maxmod

#endif // MAXMOD_POLYNOMIAL_HPP
