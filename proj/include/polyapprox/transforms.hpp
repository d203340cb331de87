#ifndef POLYAPPROX_TRANSFORMS_HPP
#define POLYAPPROX_TRANSFORMS_HPP

#include <cstddef>
#include <vector>

#include "polyapprox/errors.hpp"
#include "polyapprox/scalar.hpp"
#include "polyapprox/series.hpp"

namespace polyapprox {

enum class RegionKind { RealRooted, Stable, IntervalAvoiding, SectorAvoiding };

// The zero-free hypothesis the caller promises about the polynomial's roots.
struct RootRegion {
    RegionKind kind;
    double delta;
    double alpha = 0;  // SectorAvoiding only

    static RootRegion real_rooted(double delta) { return {RegionKind::RealRooted, delta}; }
    static RootRegion stable(double delta) { return {RegionKind::Stable, delta}; }
    static RootRegion interval_avoiding(double delta) {
        return {RegionKind::IntervalAvoiding, delta};
    }
    static RootRegion sector_avoiding(double alpha, double delta) {
        return {RegionKind::SectorAvoiding, delta, alpha};
    }
};

// Disc-to-region map data: psi sends 0 to 0 and 1 to 1, the beta-disc image
// avoids the root region, and the Taylor truncation of ln(p o psi) obeys the
// tail bound N / (beta^m (beta-1)(m+1)).
template <class C>
struct TransformPlan {
    real_of<C> rho;
    real_of<C> xi;
    real_of<C> beta;
    TruncatedSeries<C> psi;
    std::size_t m = 0;
    std::size_t degree_bound = 0;  // N
    real_of<C> tail_bound = real_of<C>(0);
};

template <class R>
R truncation_tail_bound(const R& beta, std::size_t degree_bound, std::size_t m) {
    return R(static_cast<double>(degree_bound)) /
           (detail::pow_adl(beta, R(static_cast<double>(m))) * (beta - R(1)) *
            R(static_cast<double>(m + 1)));
}

// Smallest m >= 1 with N/(beta^m (beta-1)(m+1)) <= eps; direct scan, the
// bound is strictly decreasing in m.
inline std::size_t required_order(double beta, std::size_t degree_bound, double eps) {
    std::size_t m = 1;
    while (truncation_tail_bound(beta, degree_bound, m) > eps) {
        ++m;
    }
    return m;
}

namespace detail {

// Clamp keeps rho = 4 delta/3 (real-rooted) and rho = delta (stable) below 1;
// roots <= -delta implies roots <= -delta_eff, so the hypothesis survives.
inline double clamp_delta(double delta, double cap) {
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw DeltaOutOfRange();
    }
    return delta < cap ? delta : cap;
}

template <class C>
void finish_plan(TransformPlan<C>& plan, std::size_t degree_bound) {
    plan.degree_bound = degree_bound;
    plan.tail_bound = truncation_tail_bound(plan.beta, degree_bound, plan.m);
}

}  // namespace detail

// Map parameters without the series: enough to run required_order.
struct PlanParams {
    double rho;
    double xi;
    double beta;
};

inline PlanParams real_rooted_params(double delta) {
    const double rho = 4.0 * detail::clamp_delta(delta, 0.74) / 3.0;
    const double xi = 1.0 - std::sqrt(rho / (1.0 + rho));
    return {rho, xi, 1.0 / xi};
}

inline PlanParams stable_params(double delta) {
    const double rho = detail::clamp_delta(delta, 0.99);
    return {rho, 1.0 / (1.0 + rho), 1.0 + rho};
}

// psi(z) = rho/(1-xi z)^2 - rho with rho = 4 delta/3: the beta-disc image
// avoids the ray (-inf, -delta].  Coefficients psi_k = rho (k+1) xi^k.
template <class C>
TransformPlan<C> real_rooted_transform(double delta, std::size_t m, std::size_t degree_bound = 1) {
    using R = real_of<C>;
    const PlanParams pp = real_rooted_params(delta);
    TransformPlan<C> plan;
    plan.rho = R(pp.rho);
    plan.xi = R(pp.xi);
    plan.beta = R(pp.beta);
    plan.m = m;
    plan.psi = TruncatedSeries<C>(m);
    R xpow(1);
    for (std::size_t k = 1; k <= m; ++k) {
        xpow *= plan.xi;
        plan.psi[k] = C(plan.rho * R(static_cast<double>(k + 1)) * xpow);
    }
    detail::finish_plan(plan, degree_bound);
    return plan;
}

// psi(z) = rho/(1-xi z) - rho with rho = delta: the beta-disc image avoids
// the half-plane Re z <= -delta.  Coefficients psi_k = rho xi^k.
template <class C>
TransformPlan<C> stable_transform(double delta, std::size_t m, std::size_t degree_bound = 1) {
    using R = real_of<C>;
    const PlanParams pp = stable_params(delta);
    TransformPlan<C> plan;
    plan.rho = R(pp.rho);
    plan.xi = R(pp.xi);
    plan.beta = R(pp.beta);
    plan.m = m;
    plan.psi = TruncatedSeries<C>(m);
    R xpow(1);
    for (std::size_t k = 1; k <= m; ++k) {
        xpow *= plan.xi;
        plan.psi[k] = C(plan.rho * xpow);
    }
    detail::finish_plan(plan, degree_bound);
    return plan;
}

// Closed-form psi for spot checks of the zero-free claim.
template <class C>
C psi_closed_form(const RootRegion& region, const TransformPlan<C>& plan, const C& z) {
    const C one(1);
    const C d = one - C(plan.xi) * z;
    if (region.kind == RegionKind::RealRooted) {
        return C(plan.rho) / (d * d) - C(plan.rho);
    }
    return C(plan.rho) / d - C(plan.rho);
}

namespace detail {

inline double dist_to_unit_interval(const ComplexD& w) {
    const double x = std::min(1.0, std::max(0.0, w.real()));
    return std::hypot(w.real() - x, w.imag());
}

inline double dist_to_sector(const ComplexD& w, double alpha) {
    const double r = std::abs(w);
    if (r == 0.0) {
        return 0.0;
    }
    const double theta = std::abs(std::arg(w));
    if (theta <= alpha) {
        return 0.0;
    }
    if (theta - alpha < 3.14159265358979323846 / 2.0) {
        return r * std::sin(theta - alpha);
    }
    return r;
}

// Replace the last coefficient by 1 minus the head sum so that the
// left-to-right sum of psi[1..m] is exactly 1: the head lands in [1/2, 2]
// where the subtraction is exact (Sterbenz), so head + (1 - head) rounds to 1.
template <class C>
void pin_sum_to_one(TruncatedSeries<C>& psi) {
    C head(0);
    for (std::size_t k = 1; k + 1 <= psi.order(); ++k) {
        head += psi[k];
    }
    psi[psi.order()] = C(1) - head;
}

template <class C, class DistFn, class FillFn>
TransformPlan<C> containment_search(double delta, std::size_t m, std::size_t degree_bound,
                                    DistFn&& boundary_distance, FillFn&& fill) {
    using R = real_of<C>;
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw DeltaOutOfRange();
    }
    const double floor_rho = delta * std::ldexp(1.0, -40);
    for (double rho = delta; rho >= floor_rho; rho /= 2.0) {
        TransformPlan<C> plan;
        fill(plan, rho, m);
        // Rescale so the truncation maps 1 to 1, then verify the image of the
        // beta circle stays within distance delta of the target (margin
        // delta/10, 4096 boundary samples).
        C s(0);
        for (std::size_t k = 1; k <= m; ++k) {
            s += plan.psi[k];
        }
        if (s == C(0)) {
            continue;
        }
        for (std::size_t k = 1; k <= m; ++k) {
            plan.psi[k] /= s;
        }
        pin_sum_to_one(plan.psi);
        bool ok = true;
        const int samples = 4096;
        for (int i = 0; i < samples && ok; ++i) {
            const double theta = 2.0 * 3.14159265358979323846 * i / samples;
            const C z = make_complex<C>(plan.beta * R(std::cos(theta)),
                                        plan.beta * R(std::sin(theta)));
            const ComplexD w = to_complexd(evaluate_series(plan.psi, z));
            ok = boundary_distance(w) <= delta * 0.9;
        }
        if (ok) {
            plan.m = m;
            finish_plan(plan, degree_bound);
            return plan;
        }
    }
    throw ContainmentCheckFailed();
}

}  // namespace detail

// Experimental: psi(z) = rho ln(1/(1 - xi z)), truncated and rescaled so the
// truncation maps the beta-disc into the delta-neighborhood of [0,1].
template <class C>
TransformPlan<C> interval_transform(double delta, std::size_t m, std::size_t degree_bound = 1) {
    using R = real_of<C>;
    return detail::containment_search<C>(
        delta, m, degree_bound,
        [](const ComplexD& w) { return detail::dist_to_unit_interval(w); },
        [](TransformPlan<C>& plan, double rho, std::size_t order) {
            const double xi = 1.0 - std::exp(-1.0 / rho);
            const double beta = (1.0 - std::exp(-1.0 - 1.0 / rho)) / (1.0 - std::exp(-1.0 / rho));
            plan.rho = R(rho);
            plan.xi = R(xi);
            plan.beta = R(beta);
            plan.psi = TruncatedSeries<C>(order);
            R xpow(1);
            for (std::size_t k = 1; k <= order; ++k) {
                xpow *= plan.xi;
                plan.psi[k] = C(plan.rho * xpow / R(static_cast<double>(k)));
            }
        });
}

// Experimental: psi(z) = rho (1 - xi z)^{-2 alpha/pi} - rho, truncated and
// rescaled; image kept near the sector |arg z| <= alpha.
template <class C>
TransformPlan<C> sector_transform(double alpha, double delta, std::size_t m,
                                  std::size_t degree_bound = 1) {
    using R = real_of<C>;
    const double pi = 3.14159265358979323846;
    if (!(alpha > 0.0) || !(alpha <= pi / 2.0 + 1e-15)) {
        throw AlphaOutOfRange();
    }
    const double s_exp = 2.0 * alpha / pi;
    return detail::containment_search<C>(
        delta, m, degree_bound,
        [alpha](const ComplexD& w) { return detail::dist_to_sector(w, alpha); },
        [pi, alpha, s_exp](TransformPlan<C>& plan, double rho, std::size_t order) {
            const double t = std::pow(rho / (1.0 + rho), pi / (2.0 * alpha));
            const double xi = 1.0 - t;
            plan.rho = R(rho);
            plan.xi = R(xi);
            plan.beta = R((1.0 - t / 2.0) / xi);
            plan.psi = TruncatedSeries<C>(order);
            // (1 - u)^{-s} = sum_k C(s+k-1, k) u^k; all coefficients positive.
            R binom(1);
            R xpow(1);
            for (std::size_t k = 1; k <= order; ++k) {
                binom *= R(s_exp + static_cast<double>(k) - 1.0) / R(static_cast<double>(k));
                xpow *= plan.xi;
                plan.psi[k] = C(plan.rho * binom * xpow);
            }
        });
}

}  // namespace polyapprox

#endif
