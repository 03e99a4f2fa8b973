#ifndef MAXMOD_GENERATORS_HPP
#define MAXMOD_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "maxmod/errors.hpp"
#include "maxmod/polynomial.hpp"

namespace maxmod {

/// Default master seed for every seeded CLI command.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Per-instance seed split: master seed XOR the hashed instance index.
/// Parallel campaigns stay reproducible because instance i never consumes
/// draws belonging to instance j.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

/// mt19937_64 with raw-bit double conversion, so streams are bit-identical
/// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double angle() { return 2.0 * std::numbers::pi * uniform01(); }

private:
    std::mt19937_64 eng_;
};

enum class GeneratorClass {
    zeros_on_circle,
    lacunary_on_circle,
    no_zeros_in_disk,
    extremal_bernstein,
    extremal_ar,
};

inline const char* generator_class_name(GeneratorClass c) {
    switch (c) {
    case GeneratorClass::zeros_on_circle: return "zeros-on-circle";
    case GeneratorClass::lacunary_on_circle: return "lacunary";
    case GeneratorClass::no_zeros_in_disk: return "no-zeros-in-disk";
    case GeneratorClass::extremal_bernstein: return "extremal-bernstein";
    case GeneratorClass::extremal_ar: return "extremal-ar";
    }
    return "?";
}

inline GeneratorClass parse_generator_class(const std::string& name) {
    if (name == "zeros-on-circle") return GeneratorClass::zeros_on_circle;
    if (name == "lacunary") return GeneratorClass::lacunary_on_circle;
    if (name == "no-zeros-in-disk") return GeneratorClass::no_zeros_in_disk;
    if (name == "extremal-bernstein") return GeneratorClass::extremal_bernstein;
    if (name == "extremal-ar") return GeneratorClass::extremal_ar;
    throw std::domain_error("unknown generator class: " + name);
}

/// A generated polynomial together with its construction record.  The roots
/// are provenance: they were placed, never solved for, so hypothesis checks
/// can use them directly.
struct GeneratedInstance {
    Polynomial poly;
    std::vector<Complex> roots; // origin zeros included as exact 0
    GeneratorClass cls = GeneratorClass::zeros_on_circle;
    int n = 0;
    int m = 0;
    int gap = 1; // mu for the lacunary class, t for the zero-free-disk class
    double K = 1.0;
    std::uint64_t seed = 0;
};

/// Monic with all n zeros uniformly placed on |z| = K, K <= 1.
inline GeneratedInstance zeros_on_circle(int n, double K, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("zeros_on_circle: n must be >= 1");
    if (!(K > 0.0 && K <= 1.0))
        throw std::domain_error("zeros_on_circle: K must lie in (0, 1]");
    Rng rng(seed);
    std::vector<Complex> roots;
    roots.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double phi = rng.angle();
        roots.emplace_back(K * std::cos(phi), K * std::sin(phi));
    }
    GeneratedInstance inst{from_roots(1.0, roots), std::move(roots),
                           GeneratorClass::zeros_on_circle, n, 0, 1, K, seed};
    return inst;
}

/// z^m q(z^d) with q monic of degree (n-m)/d over random points of modulus
/// K^d: an m-fold origin zero, the remaining n-m zeros on |z| = K, and a
/// coefficient gap of exactly d below the top of the bracket.  Composition is
/// the only exact construction giving both properties at once, at the price
/// of requiring d | (n-m).
inline GeneratedInstance lacunary_on_circle(int n, int m, int d, double K, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("lacunary_on_circle: n must be >= 1");
    if (m < 0 || m > n - 1) throw std::domain_error("lacunary_on_circle: m must lie in [0, n-1]");
    if (d < 1) throw std::domain_error("lacunary_on_circle: d must be >= 1");
    if ((n - m) % d != 0)
        throw std::domain_error("lacunary_on_circle: d must divide n - m");
    if (!(K > 0.0 && K <= 1.0))
        throw std::domain_error("lacunary_on_circle: K must lie in (0, 1]");

    const int k = (n - m) / d;
    const double Kd = std::pow(K, static_cast<double>(d));
    Rng rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Complex> w(k);
        for (Complex& wj : w) {
            const double psi = rng.angle();
            wj = Complex(Kd * std::cos(psi), Kd * std::sin(psi));
        }
        const Polynomial q = from_roots(1.0, w);
        if (k > 1) {
            double max_abs = 0.0;
            for (const Complex& c : q.coeffs()) max_abs = std::max(max_abs, std::abs(c));
            if (std::abs(q.coeff(k - 1)) <= kLacunaryZeroTol * max_abs)
                continue; // degenerate second coefficient: gap would exceed d
        }
        std::vector<Complex> coeffs(n + 1, 0.0);
        for (int j = 0; j <= k; ++j) coeffs[m + j * d] = q.coeff(j);

        std::vector<Complex> roots(m, Complex(0.0, 0.0));
        for (const Complex& wj : w) {
            const double base = std::arg(wj);
            for (int l = 0; l < d; ++l) {
                const double phi = (base + 2.0 * std::numbers::pi * l) / d;
                roots.emplace_back(K * std::cos(phi), K * std::sin(phi));
            }
        }
        return GeneratedInstance{Polynomial(std::move(coeffs)), std::move(roots),
                                 GeneratorClass::lacunary_on_circle, n, m, d, K, seed};
    }
    throw ResourceError("lacunary_on_circle: 16 resampling attempts hit a degenerate "
                        "second coefficient",
                        0.0);
}

/// q(z^t) with the roots of q drawn with modulus in [K^t, (2K)^t]: coefficient
/// support inside {0, t, 2t, ..., n} and every zero of modulus in [K, 2K], so
/// the polynomial has no zeros in D(0, K), K >= 1.
inline GeneratedInstance no_zeros_in_disk(int n, int t, double K, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("no_zeros_in_disk: n must be >= 1");
    if (t < 1 || t > n) throw std::domain_error("no_zeros_in_disk: t must lie in [1, n]");
    if (n % t != 0) throw std::domain_error("no_zeros_in_disk: t must divide n");
    if (!(K >= 1.0)) throw std::domain_error("no_zeros_in_disk: K must be >= 1");

    const int k = n / t;
    const double lo = std::pow(K, static_cast<double>(t));
    const double hi = std::pow(2.0 * K, static_cast<double>(t));
    Rng rng(seed);
    std::vector<Complex> w(k);
    std::vector<Complex> roots;
    roots.reserve(n);
    for (Complex& wj : w) {
        const double rho = rng.uniform(lo, hi);
        const double psi = rng.angle();
        wj = Complex(rho * std::cos(psi), rho * std::sin(psi));
        const double rr = std::pow(rho, 1.0 / t);
        const double base = std::arg(wj);
        for (int l = 0; l < t; ++l) {
            const double phi = (base + 2.0 * std::numbers::pi * l) / t;
            roots.emplace_back(rr * std::cos(phi), rr * std::sin(phi));
        }
    }
    const Polynomial q = from_roots(1.0, w);
    std::vector<Complex> coeffs(n + 1, 0.0);
    for (int j = 0; j <= k; ++j) coeffs[j * t] = q.coeff(j);
    return GeneratedInstance{Polynomial(std::move(coeffs)), std::move(roots),
                             GeneratorClass::no_zeros_in_disk, n, 0, t, K, seed};
}

/// alpha z^n, the polynomial attaining M(p,R) = R^n ||p||.
inline GeneratedInstance extremal_bernstein(int n, Complex alpha) {
    if (n < 1) throw std::domain_error("extremal_bernstein: n must be >= 1");
    if (std::abs(alpha) == 0.0)
        throw std::domain_error("extremal_bernstein: alpha must be nonzero");
    std::vector<Complex> coeffs(n + 1, 0.0);
    coeffs[n] = alpha;
    return GeneratedInstance{Polynomial(std::move(coeffs)),
                             std::vector<Complex>(n, Complex(0.0, 0.0)),
                             GeneratorClass::extremal_bernstein, n, n, 1, 1.0, 0};
}

/// (alpha + beta z^n)/2 with |alpha| = |beta| = 1: all zeros on |z| = 1 and
/// M(p,R) = ((R^n+1)/2) ||p|| exactly.
inline GeneratedInstance extremal_ar(int n, Complex alpha, Complex beta) {
    if (n < 1) throw std::domain_error("extremal_ar: n must be >= 1");
    if (std::abs(std::abs(alpha) - 1.0) > 1e-12 || std::abs(std::abs(beta) - 1.0) > 1e-12)
        throw std::domain_error("extremal_ar: alpha and beta must have unit modulus");
    std::vector<Complex> coeffs(n + 1, 0.0);
    coeffs[0] = alpha * 0.5;
    coeffs[n] = beta * 0.5;
    std::vector<Complex> roots;
    roots.reserve(n);
    const double base = std::arg(-alpha / beta);
    for (int l = 0; l < n; ++l) {
        const double phi = (base + 2.0 * std::numbers::pi * l) / n;
        roots.emplace_back(std::cos(phi), std::sin(phi));
    }
    return GeneratedInstance{Polynomial(std::move(coeffs)), std::move(roots),
                             GeneratorClass::extremal_ar, n, 0, 1, 1.0, 0};
}

/// Post-construction membership check: root moduli, origin multiplicity,
/// residual at each placed root, and (for the lacunary class) the detected
/// profile.  Campaigns call this before trusting an instance.
inline void verify_membership(const GeneratedInstance& inst) {
    if (inst.poly.degree() != inst.n)
        throw ClassError("generated instance: degree mismatch");
    if (static_cast<int>(inst.roots.size()) != inst.n)
        throw ClassError("generated instance: root count mismatch");

    int origin = 0;
    for (const Complex& r : inst.roots)
        if (std::abs(r) == 0.0) ++origin;

    const double coeff_sum = coeff_abs_sum(inst.poly, 1.0);
    for (const Complex& r : inst.roots) {
        const double ar = std::abs(r);
        switch (inst.cls) {
        case GeneratorClass::zeros_on_circle:
        case GeneratorClass::lacunary_on_circle:
            if (ar != 0.0 && std::abs(ar - inst.K) > 1e-12 * inst.K)
                throw ClassError("generated instance: root off the circle |z| = K");
            break;
        case GeneratorClass::no_zeros_in_disk:
            if (ar < inst.K * (1.0 - 1e-12))
                throw ClassError("generated instance: root inside D(0, K)");
            break;
        case GeneratorClass::extremal_bernstein:
            if (ar != 0.0) throw ClassError("generated instance: nonzero root of alpha z^n");
            break;
        case GeneratorClass::extremal_ar:
            if (std::abs(ar - 1.0) > 1e-12)
                throw ClassError("generated instance: root off the unit circle");
            break;
        }
        const double residual = std::abs(evaluate(inst.poly, r));
        const double budget = inst.n * 0x1p-52 * coeff_sum *
                              std::pow(std::max(1.0, ar), static_cast<double>(inst.n));
        if (residual > budget)
            throw ClassError("generated instance: residual at a placed root exceeds budget");
    }

    if (inst.cls == GeneratorClass::lacunary_on_circle) {
        if (origin != inst.m) throw ClassError("generated instance: origin multiplicity mismatch");
        const auto prof = lacunary_profile(inst.poly);
        if (!prof || prof->n != inst.n || prof->m != inst.m || prof->mu != inst.gap)
            throw ClassError("generated instance: detected lacunary profile mismatch");
    }
}

} // namespace maxmod

#endif // MAXMOD_GENERATORS_HPP
