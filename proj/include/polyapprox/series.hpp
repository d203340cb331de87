#ifndef POLYAPPROX_SERIES_HPP
#define POLYAPPROX_SERIES_HPP

#include <cstddef>
#include <vector>

#include "polyapprox/scalar.hpp"

namespace polyapprox {

// Formal power series truncated at order m: coefficients c_0..c_m.
template <class C>
struct TruncatedSeries {
    std::vector<C> coeffs;

    TruncatedSeries() : coeffs(1, C(0)) {}
    explicit TruncatedSeries(std::size_t order) : coeffs(order + 1, C(0)) {}
    explicit TruncatedSeries(std::vector<C> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) {
            coeffs.push_back(C(0));
        }
    }

    std::size_t order() const { return coeffs.size() - 1; }
    const C& operator[](std::size_t k) const { return coeffs[k]; }
    C& operator[](std::size_t k) { return coeffs[k]; }
};

// Schoolbook product with all monomials of degree > m discarded.
template <class C>
TruncatedSeries<C> truncated_multiply(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b,
                                      std::size_t m) {
    TruncatedSeries<C> out(m);
    const std::size_t amax = a.order() < m ? a.order() : m;
    for (std::size_t i = 0; i <= amax; ++i) {
        if (a[i] == C(0)) {
            continue;
        }
        const std::size_t kmax = (m - i) < b.order() ? (m - i) : b.order();
        for (std::size_t k = 0; k <= kmax; ++k) {
            out[i + k] += a[i] * b[k];
        }
    }
    return out;
}

// Horner evaluation of the truncated series at a point.
template <class C>
C evaluate_series(const TruncatedSeries<C>& s, const C& z) {
    C acc(0);
    for (std::size_t k = s.order() + 1; k-- > 0;) {
        acc = acc * z + s[k];
    }
    return acc;
}

// Neumaier compensated summation.
template <class C>
class CompensatedSum {
  public:
    void add(const C& x) {
        const C t = sum_ + x;
        using R = real_of<C>;
        const R cr = detail::abs_adl(real(sum_)) >= detail::abs_adl(real(x))
                         ? (real(sum_) - real(t)) + real(x)
                         : (real(x) - real(t)) + real(sum_);
        const R ci = detail::abs_adl(imag(sum_)) >= detail::abs_adl(imag(x))
                         ? (imag(sum_) - imag(t)) + imag(x)
                         : (imag(x) - imag(t)) + imag(sum_);
        comp_ += make_complex<C>(cr, ci);
        sum_ = t;
    }
    C value() const { return sum_ + comp_; }

  private:
    C sum_ = C(0);
    C comp_ = C(0);
};

}  // namespace polyapprox

#endif
