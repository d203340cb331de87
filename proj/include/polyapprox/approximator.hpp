#ifndef POLYAPPROX_APPROXIMATOR_HPP
#define POLYAPPROX_APPROXIMATOR_HPP

#include <cstddef>

#include "polyapprox/errors.hpp"
#include "polyapprox/logtaylor.hpp"
#include "polyapprox/prefix.hpp"
#include "polyapprox/scalar.hpp"
#include "polyapprox/series.hpp"
#include "polyapprox/transforms.hpp"

namespace polyapprox {

// Log-space estimate of p(1) with the tail bound actually achieved.
template <class C>
struct Estimate {
    C log_value = C(0);    // T_m(1) plus any rescaling log-offset
    C value = C(0);        // exp(log_value); may overflow to inf, log is authoritative
    std::size_t order_used = 0;
    real_of<C> tail_bound = real_of<C>(0);
    RootRegion region{RegionKind::RealRooted, 0.5};
};

namespace detail {

// Degree bound N of the composed rational function g = p o psi: the
// real-rooted map has denominator (1-xi z)^{2n}, the stable map (1-xi z)^n.
inline std::size_t degree_bound_for(const RootRegion& region, std::size_t n) {
    const std::size_t factor = region.kind == RegionKind::RealRooted ? 4 : 2;
    const std::size_t N = factor * n;
    return N == 0 ? 1 : N;
}

inline PlanParams params_for(const RootRegion& region) {
    switch (region.kind) {
        case RegionKind::RealRooted:
            return real_rooted_params(region.delta);
        case RegionKind::Stable:
            return stable_params(region.delta);
        default:
            throw UnsupportedRegion();
    }
}

template <class C>
TransformPlan<C> plan_for(const RootRegion& region, std::size_t m, std::size_t N) {
    if (region.kind == RegionKind::RealRooted) {
        return real_rooted_transform<C>(region.delta, m, N);
    }
    return stable_transform<C>(region.delta, m, N);
}

}  // namespace detail

// The order the pipeline will select for a polynomial of degree n.
inline std::size_t order_for_region(const RootRegion& region, std::size_t n, double eps) {
    return required_order(detail::params_for(region).beta, detail::degree_bound_for(region, n),
                          eps / 2.0);
}

// T_m(1) approximation of ln p(1) under the promised root region.  The region
// hypothesis is the caller's responsibility and is not verified here.
template <class C>
Estimate<C> approximate_log_p1(const PolynomialPrefix& p, const RootRegion& region, double eps) {
    using R = real_of<C>;
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw Error("eps must lie in (0, 1)");
    }
    if (p.known.empty() || p.known[0].is_zero()) {
        throw ZeroConstantTerm();
    }
    const std::size_t n = p.degree;
    const std::size_t N = detail::degree_bound_for(region, n);
    const std::size_t m = order_for_region(region, n, eps);
    // Coefficients past the true degree are identically zero, so only
    // a_0..a_min(m,n) need to be known.
    const std::size_t need = m < n ? m : n;
    if (p.known_order() < need) {
        throw InsufficientCoefficients(need);
    }
    auto plan = detail::plan_for<C>(region, m, N);
    auto wp = to_working_precision<C>(p, m);
    auto g = compose_truncated(wp.coeffs, plan.psi, m);
    auto f = log_taylor(g);
    Estimate<C> est;
    est.log_value = taylor_sum_at_one(f);
    if (wp.shift != 0) {
        using std::log;
        est.log_value += C(R(static_cast<double>(wp.shift)) * log(R(2)));
    }
    est.value = detail::exp_adl(est.log_value);
    est.order_used = m;
    est.tail_bound = plan.tail_bound;
    est.region = region;
    return est;
}

template <class C>
Estimate<C> approximate_p1(const PolynomialPrefix& p, const RootRegion& region, double eps) {
    return approximate_log_p1<C>(p, region, eps);
}

// Estimate of p'(1)/p(1): the derivative of a polynomial satisfying either
// hypothesis satisfies it too (Rolle / Gauss-Lucas), so the same region is
// reused for the sub-pipeline.
template <class C>
C approximate_derivative_ratio(const PolynomialPrefix& p, const RootRegion& region, double eps) {
    if (p.degree == 0) {
        throw ConstantPolynomial();
    }
    if (p.known.size() < 2 || p.known[1].is_zero()) {
        throw ZeroConstantTerm();
    }
    const PolynomialPrefix dp = derivative_prefix(p);
    const auto num = approximate_log_p1<C>(dp, region, eps / 2.0);
    const auto den = approximate_log_p1<C>(p, region, eps / 2.0);
    return detail::exp_adl(num.log_value - den.log_value);
}

// Debug-only spot check of the zero-free claim: samples |g| = |p(psi(z))| on
// a grid in the beta-disc using the full coefficient list.  Returns the
// smallest sampled modulus.
template <class C>
real_of<C> zero_free_diagnostic(const PolynomialPrefix& p, const RootRegion& region,
                                int radial = 8, int angular = 64) {
    using R = real_of<C>;
    auto plan = detail::plan_for<C>(region, 1, 1);
    R best = std::numeric_limits<R>::max();
    for (int i = 1; i <= radial; ++i) {
        const double r = to_double(plan.beta) * (static_cast<double>(i) / (radial + 1));
        for (int j = 0; j < angular; ++j) {
            const double theta = 2.0 * 3.14159265358979323846 * j / angular;
            const C z = make_complex<C>(R(r * std::cos(theta)), R(r * std::sin(theta)));
            const C w = psi_closed_form(region, plan, z);
            const R mod = detail::abs_adl(evaluate_exact(p, w));
            if (mod < best) {
                best = mod;
            }
        }
    }
    return best;
}

}  // namespace polyapprox

#endif
