#ifndef POLYAPPROX_SCALAR_HPP
#define POLYAPPROX_SCALAR_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>
#include <utility>

namespace polyapprox {

// Exact arithmetic used for coefficient ingestion and structure counts.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Default working precision: 53-bit significand.
using ComplexD = std::complex<double>;
// High working precision: 113-bit significand, for rounding-budget checks.
using ComplexQ = boost::multiprecision::cpp_complex_quad;

// Real type underlying a complex scalar (double or cpp_bin_float_quad).
template <class C>
using real_of = std::decay_t<decltype(real(std::declval<const C&>()))>;

namespace detail {
using std::abs;
using std::atan2;
using std::exp;
using std::floor;
using std::imag;
using std::ldexp;
using std::log;
using std::pow;
using std::real;
using std::sqrt;

template <class R>
R ldexp_adl(const R& x, int e) {
    return ldexp(x, e);
}
template <class C>
auto abs_adl(const C& z) {
    return abs(z);
}
template <class C>
C log_adl(const C& z) {
    return log(z);
}
template <class C>
C exp_adl(const C& z) {
    return exp(z);
}
template <class R>
R sqrt_adl(const R& x) {
    return sqrt(x);
}
template <class R>
R pow_adl(const R& x, const R& y) {
    return pow(x, y);
}
template <class C>
auto arg_adl(const C& z) {
    return atan2(imag(z), real(z));
}
}  // namespace detail

template <class C>
C make_complex(const real_of<C>& re, const real_of<C>& im) {
    return C(re, im);
}

inline double to_double(double x) {
    return x;
}
template <class R>
double to_double(const R& x) {
    return x.template convert_to<double>();
}

template <class C>
ComplexD to_complexd(const C& z) {
    return ComplexD(to_double(real(z)), to_double(imag(z)));
}

// floor(log2 |x|) of a nonzero rational, within +-1.
inline long rational_log2(const Rational& x) {
    const BigInt num = abs(numerator(x));
    const BigInt den = denominator(x);
    return static_cast<long>(msb(num)) - static_cast<long>(msb(den));
}

// x * 2^{-shift} rounded to R, routed through a wide-exponent float so that
// rationals far outside R's range convert without overflow.
template <class R>
R rational_to_real(const Rational& x, long shift = 0) {
    if (x == 0) {
        return R(0);
    }
    using Wide = boost::multiprecision::cpp_bin_float_50;
    Wide w(x);
    w = ldexp(w, static_cast<int>(-shift));
    if constexpr (std::is_same_v<R, double>) {
        return w.convert_to<double>();
    } else {
        return R(w);
    }
}

}  // namespace polyapprox

#endif
