#ifndef MAXMOD_BOUNDS_HPP
#define MAXMOD_BOUNDS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace maxmod {

enum class BoundId { bernstein, ankeny_rivlin, ggm, dewan_ahuja, nwaeze };

inline const char* bound_name(BoundId id) {
    switch (id) {
    case BoundId::bernstein: return "bernstein";
    case BoundId::ankeny_rivlin: return "ankeny_rivlin";
    case BoundId::ggm: return "ggm";
    case BoundId::dewan_ahuja: return "dewan_ahuja";
    case BoundId::nwaeze: return "nwaeze";
    }
    return "?";
}

/// Parses both underscore and hyphen spellings (CLI uses hyphens).
inline BoundId parse_bound(std::string name) {
    for (char& c : name)
        if (c == '-') c = '_';
    if (name == "bernstein") return BoundId::bernstein;
    if (name == "ankeny_rivlin") return BoundId::ankeny_rivlin;
    if (name == "ggm") return BoundId::ggm;
    if (name == "dewan_ahuja") return BoundId::dewan_ahuja;
    if (name == "nwaeze") return BoundId::nwaeze;
    throw std::domain_error("unknown bound id: " + name);
}

namespace detail {
inline void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}
inline double powi(double base, int e) { return std::pow(base, static_cast<double>(e)); }
} // namespace detail

/// M(p,R) <= R^n ||p||.
inline double bernstein(int n, double R) {
    detail::require(n >= 1, "bernstein: n must be >= 1");
    detail::require(R >= 1.0, "bernstein: R must be >= 1");
    return detail::powi(R, n);
}

/// M(p,R) <= ((R^n + 1)/2) ||p|| for p with no zeros in the open unit disk.
inline double ankeny_rivlin(int n, double R) {
    detail::require(n >= 1, "ankeny_rivlin: n must be >= 1");
    detail::require(R >= 1.0, "ankeny_rivlin: R must be >= 1");
    return 0.5 * (detail::powi(R, n) + 1.0);
}

/// Multiplier of {M(p,1)}^s bounding {M(p,R)}^s for p with all zeros on
/// |z| = K, K <= 1.  Written as 1 + (R^{ns}-1)/(K^{n-1}+K^n) so that R = 1
/// yields exactly 1.
inline double dewan_ahuja(int n, double K, double R, int s) {
    detail::require(n >= 1, "dewan_ahuja: n must be >= 1");
    detail::require(K > 0.0 && K <= 1.0, "dewan_ahuja: K must lie in (0, 1]");
    detail::require(R >= 1.0, "dewan_ahuja: R must be >= 1");
    detail::require(s >= 1, "dewan_ahuja: s must be >= 1");
    const double den = detail::powi(K, n - 1) + detail::powi(K, n);
    return 1.0 + (detail::powi(R, n * s) - 1.0) / den;
}

/// Derivative bound factor: max_{|z|=1} |p'| <= factor * max_{|z|=1} |p| for
/// p = z^m [a_{n-m} z^{n-m} + sum_{j>=mu} a_{n-m-j} z^{n-m-j}] with the m-fold
/// zero at the origin and the remaining zeros on |z| = K <= 1.
inline double kumar_lal_factor(int n, int m, int mu, double K) {
    detail::require(n >= 1, "kumar_lal_factor: n must be >= 1");
    detail::require(m >= 0 && m <= n - 1, "kumar_lal_factor: m must lie in [0, n-1]");
    detail::require(mu >= 1 && mu <= n - m, "kumar_lal_factor: mu must lie in [1, n-m]");
    detail::require(K > 0.0 && K <= 1.0, "kumar_lal_factor: K must lie in (0, 1]");
    const double A = detail::powi(K, n - m - 2 * mu + 1);
    const double B = detail::powi(K, n - m - mu + 1);
    return (n + m * (A + B - 1.0)) / (A + B);
}

/// L(mu; K, m, n, s): multiplier of {M(p,1)}^s bounding {M(p,R)}^s over the
/// lacunary class of kumar_lal_factor.  Equals 1 at R = 1, the m = 0 reduced
/// form for m = 0, and dewan_ahuja for m = 0, mu = 1.
inline double nwaeze(int n, int m, int mu, double K, double R, int s) {
    detail::require(R >= 1.0, "nwaeze: R must be >= 1");
    detail::require(s >= 1, "nwaeze: s must be >= 1");
    const double factor = kumar_lal_factor(n, m, mu, K); // validates n, m, mu, K
    return 1.0 + (detail::powi(R, n * s) - 1.0) * factor / n;
}

/// Inputs of the Gardner-Govil-Musukula bound for p = a_0 + sum_{j=t}^n a_j z^j
/// with no zeros in D(0, K), K >= 1.  min_m is the minimum modulus of p on
/// |z| = K (distinct from the origin multiplicity used by the lacunary class).
struct GGMParams {
    int n = 1;
    int t = 1;
    double K = 1.0;
    double R = 1.0;
    double norm_p = 1.0;
    double min_m = 0.0;
    double abs_a0 = 0.0;
    double abs_at = 0.0;
    double abs_an = 0.0;

    void validate() const {
        detail::require(n >= 1, "ggm: n must be >= 1");
        detail::require(t >= 1 && t <= n, "ggm: t must lie in [1, n]");
        detail::require(K >= 1.0, "ggm: K must be >= 1");
        detail::require(R >= 1.0, "ggm: R must be >= 1");
        detail::require(min_m >= 0.0, "ggm: min modulus must be >= 0");
        detail::require(norm_p > min_m, "ggm: norm must exceed the min modulus");
        detail::require(abs_a0 >= 0.0 && abs_at >= 0.0, "ggm: coefficient moduli must be >= 0");
        detail::require(abs_an > 0.0, "ggm: |a_n| must be positive");
    }
};

/// Sharpening parameter s0 of the GGM bound; exactly 1 at K = 1.
inline double ggm_s0(const GGMParams& gp) {
    gp.validate();
    detail::require(gp.abs_a0 > gp.min_m, "ggm: |a_0| must exceed the min modulus");
    const double c = (static_cast<double>(gp.t) / gp.n) * gp.abs_at / (gp.abs_a0 - gp.min_m);
    return detail::powi(gp.K, gp.t + 1) * (c * detail::powi(gp.K, gp.t - 1) + 1.0) /
           (c * detail::powi(gp.K, gp.t + 1) + 1.0);
}

namespace detail {

/// x - ln(1+x) without cancellation near x = 0.
inline double x_minus_log1p(double x) {
    if (x < 1e-4) {
        const double x2 = x * x;
        return x2 * (1.0 / 2.0 - x / 3.0 + x2 / 4.0 - x2 * x / 5.0 + x2 * x2 / 6.0);
    }
    return x - std::log1p(x);
}

} // namespace detail

/// The full GGM bound on M(p,R) in absolute form (not a multiplier).  At
/// R = 1 both correction terms vanish and the bound is exactly norm_p.
inline double ggm(const GGMParams& gp) {
    const double s0 = ggm_s0(gp);
    const double Rn = detail::powi(gp.R, gp.n);
    const double dm = gp.norm_p - gp.min_m;
    const double first = (Rn + s0) / (1.0 + s0) * gp.norm_p;
    const double second = (Rn - 1.0) / (1.0 + s0) * gp.min_m;
    const double x = (gp.R - 1.0) * dm / (dm + (1.0 + s0) * gp.abs_an);
    const double bracket = (dm * dm - (1.0 + s0) * (1.0 + s0) * gp.abs_an * gp.abs_an) / dm;
    const double third = gp.n / (1.0 + s0) * bracket * detail::x_minus_log1p(x);
    return first - second - third;
}

/// Parameter record shared by the CLI and the verification harness; which
/// fields are read depends on the bound.
struct BoundParams {
    int n = 1;
    int m = 0;
    int mu = 1;
    int t = 1;
    int s = 1;
    double K = 1.0;
    double R = 1.0;
    // ggm extras (absolute form)
    double norm_p = 0.0;
    double min_m = 0.0;
    double abs_a0 = 0.0;
    double abs_at = 0.0;
    double abs_an = 0.0;
};

struct BoundValue {
    double value = 0.0; // multiplier, or the absolute bound for ggm
    BoundId id = BoundId::bernstein;
    BoundParams params;
};

inline const char* bound_required_params(BoundId id) {
    switch (id) {
    case BoundId::bernstein: return "--n --R";
    case BoundId::ankeny_rivlin: return "--n --R";
    case BoundId::ggm:
        return "--n --t --K --R --norm-p --min-m --abs-a0 --abs-at --abs-an";
    case BoundId::dewan_ahuja: return "--n --K --R [--s]";
    case BoundId::nwaeze: return "--n --m --mu --K --R [--s]";
    }
    return "";
}

inline BoundValue evaluate_bound(BoundId id, const BoundParams& bp) {
    BoundValue out;
    out.id = id;
    out.params = bp;
    switch (id) {
    case BoundId::bernstein: out.value = bernstein(bp.n, bp.R); break;
    case BoundId::ankeny_rivlin: out.value = ankeny_rivlin(bp.n, bp.R); break;
    case BoundId::dewan_ahuja: out.value = dewan_ahuja(bp.n, bp.K, bp.R, bp.s); break;
    case BoundId::nwaeze: out.value = nwaeze(bp.n, bp.m, bp.mu, bp.K, bp.R, bp.s); break;
    case BoundId::ggm: {
        GGMParams gp{bp.n, bp.t, bp.K, bp.R, bp.norm_p, bp.min_m, bp.abs_a0, bp.abs_at, bp.abs_an};
        out.value = ggm(gp);
        break;
    }
    }
    return out;
}

} // namespace maxmod

#endif // MAXMOD_BOUNDS_HPP
