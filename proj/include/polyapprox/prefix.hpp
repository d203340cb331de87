#ifndef POLYAPPROX_PREFIX_HPP
#define POLYAPPROX_PREFIX_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <limits>
#include <string>
#include <vector>

#include "polyapprox/errors.hpp"
#include "polyapprox/scalar.hpp"
#include "polyapprox/series.hpp"

namespace polyapprox {

// Exact complex number with rational real and imaginary parts.
struct ExactComplex {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }
};

// The known low-order exact coefficients a_0..a_K of a polynomial of declared
// full degree n.
struct PolynomialPrefix {
    std::size_t degree = 0;            // declared full degree n
    std::vector<ExactComplex> known;   // a_0..a_K, K <= n

    std::size_t known_order() const { return known.empty() ? 0 : known.size() - 1; }
};

PolynomialPrefix make_integer_prefix(std::size_t degree, const std::vector<BigInt>& coeffs);
PolynomialPrefix make_rational_prefix(std::size_t degree, const std::vector<Rational>& coeffs);

// a'_k = (k+1) a_{k+1}, exact.
PolynomialPrefix derivative_prefix(const PolynomialPrefix& p);

// Coefficient file: line 1 `n K`; then K+1 coefficient lines, each a decimal
// or a `re im` pair of decimals; `#` lines ignored.
PolynomialPrefix parse_coefficients(std::istream& in);
Rational parse_decimal(const std::string& token, std::size_t line);

// Working-precision image of a prefix, rescaled by 2^{-shift} when the
// coefficients would overflow the scalar's exponent range.  The true
// polynomial is 2^{shift} times the converted one; ln p(1) picks up
// log_offset = shift * ln 2.
template <class C>
struct WorkingPrefix {
    std::vector<C> coeffs;
    long shift = 0;
};

template <class C>
WorkingPrefix<C> to_working_precision(const PolynomialPrefix& p, std::size_t upto) {
    using R = real_of<C>;
    long max_log2 = 0;
    for (const auto& a : p.known) {
        if (a.re != 0) {
            max_log2 = std::max(max_log2, rational_log2(a.re));
        }
        if (a.im != 0) {
            max_log2 = std::max(max_log2, rational_log2(a.im));
        }
    }
    const long limit = std::numeric_limits<R>::max_exponent - 128;
    long shift = 0;
    if (max_log2 > limit) {
        shift = max_log2 - limit / 2;
    }
    WorkingPrefix<C> out;
    out.shift = shift;
    out.coeffs.resize(upto + 1, C(0));
    const std::size_t have = std::min(upto, p.known_order());
    for (std::size_t k = 0; k <= have && k < p.known.size(); ++k) {
        out.coeffs[k] = make_complex<C>(rational_to_real<R>(p.known[k].re, shift),
                                        rational_to_real<R>(p.known[k].im, shift));
    }
    return out;
}

// Full-prefix evaluation, compensated summation.  Requires K = n.
template <class C>
C evaluate_exact(const PolynomialPrefix& p, const C& x) {
    if (p.known_order() < p.degree) {
        throw InsufficientCoefficients(p.degree);
    }
    using R = real_of<C>;
    CompensatedSum<C> acc;
    C xp(1);
    for (std::size_t k = 0; k < p.known.size(); ++k) {
        const C a = make_complex<C>(rational_to_real<R>(p.known[k].re),
                                    rational_to_real<R>(p.known[k].im));
        acc.add(a * xp);
        xp = xp * x;
    }
    return acc.value();
}

// First m+1 Taylor coefficients of p(psi(z)) by Horner's scheme, truncating
// to degree m after every step.  psi must have zero constant term, so the
// result depends on a_0..a_m only; coefficients past index m are ignored.
template <class C>
TruncatedSeries<C> compose_truncated(const std::vector<C>& coeffs, const TruncatedSeries<C>& psi,
                                     std::size_t m) {
    if (psi[0] != C(0)) {
        throw NonzeroConstantTerm();
    }
    if (coeffs.size() < m + 1) {
        throw InsufficientCoefficients(m);
    }
    TruncatedSeries<C> acc(m);
    acc[0] = coeffs[m];
    for (std::size_t k = m; k-- > 0;) {
        acc = truncated_multiply(acc, psi, m);
        acc[0] += coeffs[k];
    }
    return acc;
}

template <class C>
TruncatedSeries<C> compose_truncated(const PolynomialPrefix& p, const TruncatedSeries<C>& psi,
                                     std::size_t m) {
    if (p.known_order() < m) {
        throw InsufficientCoefficients(m);
    }
    auto wp = to_working_precision<C>(p, m);
    return compose_truncated(wp.coeffs, psi, m);
}

}  // namespace polyapprox

#endif
