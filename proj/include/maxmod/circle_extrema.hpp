#ifndef MAXMOD_CIRCLE_EXTREMA_HPP
#define MAXMOD_CIRCLE_EXTREMA_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <type_traits>
#include <vector>

#include "maxmod/errors.hpp"
#include "maxmod/polynomial.hpp"

namespace maxmod {

/// Certified enclosure of an extremum of |p| on a circle.  value is attained
/// at arg_theta, so it is always a valid one-sided bound; the true extremum
/// lies in [value, value+err] for a maximum and [max(0, value-err), value]
/// for a minimum.
struct CircleEstimate {
    double value = 0.0;
    double err = 0.0;
    double arg_theta = 0.0;
    std::uint64_t samples_used = 0;
};

/// Hard cap on circle samples per call.
inline constexpr std::uint64_t kSampleCap = 100'000'000;

/// Multiplicative slack applied to the derivative-sum constants so the
/// certificates stay valid under floating-point evaluation of the bounds.
inline constexpr double kLipSlack = 1.0 + 1e-10;

/// Upper bound on |d/dtheta |p(r e^{i theta})||: since the theta-derivative of
/// p(r e^{i theta}) is i r e^{i theta} p'(r e^{i theta}), the constant
/// r * sum_j j |a_j| r^{j-1} dominates it everywhere on the circle.
inline double lipschitz_bound(const Polynomial& p, double r) {
    if (r <= 0.0)
        throw std::domain_error("lipschitz_bound: radius must be positive");
    const auto& a = p.coeffs();
    double acc = 0.0;
    double rjm1 = 1.0; // r^{j-1}
    for (std::size_t j = 1; j < a.size(); ++j) {
        acc += static_cast<double>(j) * std::abs(a[j]) * rjm1;
        rjm1 *= r;
    }
    return r * acc;
}

/// Default certification tolerance, relative to the trivial magnitude bound.
inline double default_circle_tol(const Polynomial& p, double r) {
    return 1e-9 * (1.0 + coeff_abs_sum(p, r));
}

namespace detail {

/// Bound on |q''| for q(theta) = |p(r e^{i theta})|^2.  Writing q as the
/// trigonometric polynomial sum_k c_k e^{ik theta} with coefficient
/// autocorrelation c_k = sum_j a_{j+k} conj(a_j) r^{2j+k}, the second
/// derivative is dominated by 2 sum_{k>=1} k^2 |c_k|.
inline double second_derivative_bound_sq(const Polynomial& p, double r) {
    const auto& a = p.coeffs();
    const std::size_t n1 = a.size();
    double acc = 0.0;
    for (std::size_t k = 1; k < n1; ++k) {
        Complex ck = 0.0;
        double w = std::pow(r, static_cast<double>(k));
        const double r2 = r * r;
        for (std::size_t j = 0; j + k < n1; ++j) {
            ck += a[j + k] * std::conj(a[j]) * w;
            w *= r2;
        }
        acc += static_cast<double>(k) * static_cast<double>(k) * std::abs(ck);
    }
    return 2.0 * acc;
}

struct CircleSample {
    double f = 0.0;      // |p|
    double q = 0.0;      // |p|^2
    double qd_abs = 0.0; // |dq/dtheta|
};

struct CircleEvaluator {
    const Polynomial& p;
    double r;

    CircleSample operator()(double theta) const {
        const Complex z(r * std::cos(theta), r * std::sin(theta));
        const auto [g, gd] = evaluate_with_derivative(p, z);
        CircleSample s;
        s.q = std::norm(g);
        s.f = std::sqrt(s.q);
        // dq/dtheta = 2 Re(conj(g) * i z p'(z))
        const Complex gprime = Complex(0.0, 1.0) * z * gd;
        s.qd_abs = std::abs(2.0 * (g.real() * gprime.real() + g.imag() * gprime.imag()));
        return s;
    }
};

struct Cell {
    double bound = 0.0; // certified one-sided bound for |p| over the cell
    double theta = 0.0; // center
    double w = 0.0;     // half-width
};

struct MaxCellLess {
    bool operator()(const Cell& a, const Cell& b) const {
        if (a.bound != b.bound) return a.bound < b.bound; // top = largest bound
        return a.theta > b.theta;                         // then smallest theta
    }
};
struct MinCellLess {
    bool operator()(const Cell& a, const Cell& b) const {
        if (a.bound != b.bound) return a.bound > b.bound; // top = smallest bound
        return a.theta > b.theta;
    }
};

inline double golden_polish(const CircleEvaluator& eval, bool maximize, double lo, double hi,
                            double& best_f, double& best_theta, std::uint64_t& samples) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = eval(x1).f;
    double f2 = eval(x2).f;
    samples += 2;
    auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };
    auto consider = [&](double f, double th) {
        if (better(f, best_f)) {
            best_f = f;
            best_theta = th;
        }
    };
    consider(f1, x1);
    consider(f2, x2);
    for (int it = 0; it < 64; ++it) {
        if (better(f1, f2)) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = eval(x1).f;
            consider(f1, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = eval(x2).f;
            consider(f2, x2);
        }
        ++samples;
    }
    return best_f;
}

/// Adaptive bisection over circle cells.  Every cell carries a rigorous
/// one-sided bound built from two globally valid constants: the first-order
/// constant L1 on |p| and the second-order constant L2 on |p|^2.  Cells that
/// cannot beat the attained witness are discarded; refinement stops when the
/// outstanding bound is within target_gap of the witness.
template <bool Maximize>
CircleEstimate extremum_on_circle(const Polynomial& p, double r, double tol) {
    if (r <= 0.0)
        throw std::domain_error("circle extremum: radius must be positive");
    if (tol <= 0.0)
        throw std::domain_error("circle extremum: tolerance must be positive");

    const int n = p.degree();
    if (n == 0)
        return CircleEstimate{std::abs(p.coeff(0)), 0.0, 0.0, 1};

    const double scale = coeff_abs_sum(p, r);
    const double fp_guard = (8.0 * n + 8.0) * 0x1p-53 * (1.0 + scale);
    const double fp_guard_q = (32.0 * n + 32.0) * 0x1p-53 * (1.0 + scale) * (1.0 + scale);
    if (tol <= 4.0 * fp_guard)
        throw ResourceError("circle extremum: tolerance below floating-point certification floor",
                            4.0 * fp_guard);
    const double target_gap = tol - 2.0 * fp_guard;

    const double L1 = lipschitz_bound(p, r) * kLipSlack;
    const double L2 = detail::second_derivative_bound_sq(p, r) * kLipSlack;
    const CircleEvaluator eval{p, r};

    auto cell_bound = [&](const CircleSample& s, double w) {
        if constexpr (Maximize) {
            const double via_f = s.f + L1 * w;
            const double via_q = std::sqrt(
                std::max(0.0, s.q + s.qd_abs * w + 0.5 * L2 * w * w + fp_guard_q));
            return std::min(via_f, via_q);
        } else {
            const double via_f = s.f - L1 * w;
            const double via_q = std::sqrt(
                std::max(0.0, s.q - s.qd_abs * w - 0.5 * L2 * w * w - fp_guard_q));
            return std::max(std::max(via_f, via_q), 0.0);
        }
    };
    auto better = [](double a, double b) { return Maximize ? a > b : a < b; };

    using Heap = std::conditional_t<
        Maximize, std::priority_queue<Cell, std::vector<Cell>, MaxCellLess>,
        std::priority_queue<Cell, std::vector<Cell>, MinCellLess>>;
    Heap heap;

    std::uint64_t samples = 0;
    double best_f = Maximize ? -1.0 : std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    double best_w = 0.0;

    const int n0 = std::max(64, 8 * (n + 1));
    const double w0 = std::numbers::pi / n0;
    for (int i = 0; i < n0; ++i) {
        const double theta = (2 * i + 1) * w0;
        const CircleSample s = eval(theta);
        ++samples;
        if (better(s.f, best_f) || (s.f == best_f && theta < best_theta)) {
            best_f = s.f;
            best_theta = theta;
            best_w = w0;
        }
        heap.push(Cell{cell_bound(s, w0), theta, w0});
    }

    // Discards are safe: a cell whose bound cannot beat the attained witness
    // contributes nothing to the enclosure.
    while (!heap.empty()) {
        const Cell top = heap.top();
        if (!better(top.bound, Maximize ? best_f + target_gap : best_f - target_gap)) break;
        if (samples > kSampleCap) {
            const double gap = Maximize ? top.bound - best_f : best_f - top.bound;
            throw ResourceError("circle extremum: sample cap exceeded before tolerance reached",
                                std::max(0.0, gap) + 2.0 * fp_guard);
        }
        heap.pop();
        const double w = top.w * 0.5;
        for (int side = -1; side <= 1; side += 2) {
            const double theta = top.theta + side * w;
            const CircleSample s = eval(theta);
            ++samples;
            if (better(s.f, best_f) || (s.f == best_f && theta < best_theta)) {
                best_f = s.f;
                best_theta = theta;
                best_w = w;
            }
            const Cell child{cell_bound(s, w), theta, w};
            if (better(child.bound, best_f)) heap.push(child);
        }
    }

    double outstanding = best_f;
    if (!heap.empty() && better(heap.top().bound, best_f)) outstanding = heap.top().bound;

    if (best_w > 0.0)
        golden_polish(eval, Maximize, best_theta - best_w, best_theta + best_w, best_f,
                      best_theta, samples);

    CircleEstimate out;
    out.value = best_f;
    out.err = std::max(0.0, Maximize ? outstanding - best_f : best_f - outstanding) +
              2.0 * fp_guard;
    out.arg_theta = best_theta - 2.0 * std::numbers::pi *
                                     std::floor(best_theta / (2.0 * std::numbers::pi));
    out.samples_used = samples;
    return out;
}

} // namespace detail

/// Certified M(p, r) = max_{|z|=r} |p(z)| with err <= tol.
inline CircleEstimate max_modulus(const Polynomial& p, double r, double tol) {
    return detail::extremum_on_circle<true>(p, r, tol);
}
inline CircleEstimate max_modulus(const Polynomial& p, double r) {
    return max_modulus(p, r, default_circle_tol(p, r));
}

/// Certified min_{|z|=r} |p(z)| with err <= tol.
inline CircleEstimate min_modulus(const Polynomial& p, double r, double tol) {
    return detail::extremum_on_circle<false>(p, r, tol);
}
inline CircleEstimate min_modulus(const Polynomial& p, double r) {
    return min_modulus(p, r, default_circle_tol(p, r));
}

} // namespace maxmod

#endif // MAXMOD_CIRCLE_EXTREMA_HPP
