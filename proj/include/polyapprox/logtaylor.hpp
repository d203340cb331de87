#ifndef POLYAPPROX_LOGTAYLOR_HPP
#define POLYAPPROX_LOGTAYLOR_HPP

#include <cstddef>
#include <vector>

#include "polyapprox/errors.hpp"
#include "polyapprox/scalar.hpp"
#include "polyapprox/series.hpp"

namespace polyapprox {

// Taylor data of f = ln g at 0.  The derivatives are stored in scaled form
// taylor[k-1] = f^{(k)}(0)/k!; raw derivatives k!*taylor[k-1] overflow the
// scalar's range already near k = 170 while the scaled values stay bounded.
template <class C>
struct LogSeries {
    C f0 = C(0);              // chosen branch of ln g(0)
    std::vector<C> taylor;    // f^{(k)}(0)/k! for k = 1..m

    std::size_t order() const { return taylor.size(); }
    // f^{(k)}(0); meaningful only while k! is representable.
    C derivative(std::size_t k) const {
        using R = real_of<C>;
        R fact(1);
        for (std::size_t i = 2; i <= k; ++i) {
            fact *= R(static_cast<double>(i));
        }
        return taylor[k - 1] * fact;
    }
};

// Forward substitution of the triangular system g' = f' g.  In terms of
// Taylor coefficients G_k of g and F_k of f it reads
//   G_k = sum_{j=0}^{k-1} ((k-j)/k) F_{k-j} G_j,
// the scaled equivalent of g^{(k)}(0) = sum_j C(k-1,j) f^{(k-j)}(0) g^{(j)}(0).
// O(m^2) arithmetic operations.
template <class C>
LogSeries<C> log_taylor(const TruncatedSeries<C>& g) {
    if (g[0] == C(0)) {
        throw ZeroConstantTerm();
    }
    using R = real_of<C>;
    const std::size_t m = g.order();
    LogSeries<C> f;
    f.f0 = detail::log_adl(g[0]);
    f.taylor.resize(m, C(0));
    const C inv_g0 = C(1) / g[0];
    for (std::size_t k = 1; k <= m; ++k) {
        C acc = g[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= (R(static_cast<double>(k - j)) / R(static_cast<double>(k))) *
                   f.taylor[k - j - 1] * g[j];
        }
        f.taylor[k - 1] = acc * inv_g0;
    }
    return f;
}

// T_m(1) = f(0) + sum_{k=1}^m f^{(k)}(0)/k!, compensated.
template <class C>
C taylor_sum_at_one(const LogSeries<C>& f) {
    CompensatedSum<C> acc;
    acc.add(f.f0);
    for (const C& t : f.taylor) {
        acc.add(t);
    }
    return acc.value();
}

}  // namespace polyapprox

#endif
