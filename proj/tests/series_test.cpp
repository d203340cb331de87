#include <doctest.h>

#include <algorithm>
#include <random>

#include "polyapprox/prefix.hpp"
#include "polyapprox/series.hpp"
#include "test_util.hpp"

using namespace polyapprox;
using S = TruncatedSeries<ComplexD>;

namespace {
S series(std::vector<double> v) {
    std::vector<ComplexD> c(v.begin(), v.end());
    return S(std::move(c));
}
}  // namespace

TEST_CASE("truncated_multiply basic products") {
    auto one_plus_z = series({1, 1});
    auto r = truncated_multiply(one_plus_z, one_plus_z, 2);
    CHECK(r[0] == ComplexD(1));
    CHECK(r[1] == ComplexD(2));
    CHECK(r[2] == ComplexD(1));

    r = truncated_multiply(one_plus_z, one_plus_z, 1);
    REQUIRE(r.order() == 1);
    CHECK(r[0] == ComplexD(1));
    CHECK(r[1] == ComplexD(2));

    r = truncated_multiply(series({1, 1, 1}), series({1, -1}), 2);
    CHECK(r[0] == ComplexD(1));
    CHECK(r[1] == ComplexD(0));
    CHECK(r[2] == ComplexD(0));
}

TEST_CASE("truncated_multiply is commutative and exact on small integers") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ComplexD> a(6), b(6);
        std::vector<Rational> ra(6), rb(6);
        for (int i = 0; i < 6; ++i) {
            int x = coeff(rng), y = coeff(rng);
            a[i] = ComplexD(x);
            b[i] = ComplexD(y);
            ra[i] = x;
            rb[i] = y;
        }
        auto ab = truncated_multiply(S(a), S(b), 5);
        auto ba = truncated_multiply(S(b), S(a), 5);
        auto exact = testutil::rational_multiply(ra, rb);
        for (int i = 0; i <= 5; ++i) {
            CHECK(ab[i] == ba[i]);
            CHECK(ab[i].real() == exact[i].convert_to<double>());
        }
    }
}

TEST_CASE("truncated_multiply is associative on integer inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ComplexD> a(4), b(4), c(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = ComplexD(coeff(rng));
            b[i] = ComplexD(coeff(rng));
            c[i] = ComplexD(coeff(rng));
        }
        auto left = truncated_multiply(truncated_multiply(S(a), S(b), 6), S(c), 6);
        auto right = truncated_multiply(S(a), truncated_multiply(S(b), S(c), 6), 6);
        for (int i = 0; i <= 6; ++i) {
            CHECK(left[i].real() == doctest::Approx(right[i].real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("compose_truncated worked examples") {
    SUBCASE("identity substitution") {
        std::vector<ComplexD> p{1, 1, 0, 0};
        auto g = compose_truncated(p, series({0, 1, 0, 0}), 3);
        CHECK(g[0] == ComplexD(1));
        CHECK(g[1] == ComplexD(1));
        CHECK(g[2] == ComplexD(0));
        CHECK(g[3] == ComplexD(0));
    }
    SUBCASE("1 + x^2 at z + z^2") {
        std::vector<ComplexD> p{1, 0, 1, 0};
        auto g = compose_truncated(p, series({0, 1, 1, 0}), 3);
        CHECK(g[0] == ComplexD(1));
        CHECK(g[1] == ComplexD(0));
        CHECK(g[2] == ComplexD(1));
        CHECK(g[3] == ComplexD(2));
    }
    SUBCASE("(1+x)^2 at 2z") {
        std::vector<ComplexD> p{1, 2, 1};
        auto g = compose_truncated(p, series({0, 2, 0}), 2);
        CHECK(g[0] == ComplexD(1));
        CHECK(g[1] == ComplexD(4));
        CHECK(g[2] == ComplexD(4));
    }
}

TEST_CASE("compose_truncated rejects bad inputs") {
    std::vector<ComplexD> p{1, 1, 1, 1};
    CHECK_THROWS_AS(compose_truncated(p, series({1, 1, 0, 0}), 3), NonzeroConstantTerm);
    std::vector<ComplexD> short_p{1, 1};
    CHECK_THROWS_AS(compose_truncated(short_p, series({0, 1, 0, 0}), 3),
                    InsufficientCoefficients);
}

TEST_CASE("compose_truncated agrees with rational expansion oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<std::size_t> order(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = order(rng);
        std::vector<ComplexD> p(m + 1);
        std::vector<Rational> rp(m + 1);
        std::vector<ComplexD> psi(m + 1, ComplexD(0));
        std::vector<Rational> rpsi(m + 1, Rational(0));
        for (std::size_t i = 0; i <= m; ++i) {
            int x = coeff(rng);
            p[i] = ComplexD(x);
            rp[i] = x;
            if (i >= 1) {
                int y = coeff(rng);
                psi[i] = ComplexD(y);
                rpsi[i] = y;
            }
        }
        auto got = compose_truncated(p, S(psi), m);
        auto want = testutil::rational_compose(rp, rpsi, m);
        for (std::size_t i = 0; i <= m; ++i) {
            CHECK(got[i].real() ==
                  doctest::Approx(want[i].convert_to<double>()).epsilon(1e-12));
        }
    }
}

TEST_CASE("truncation sufficiency: coefficients beyond m are ignored bit-for-bit") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 5;
        PolynomialPrefix p;
        p.degree = 10;
        for (int k = 0; k <= 10; ++k) {
            p.known.push_back(ExactComplex{Rational(k + 1), Rational(0)});
        }
        std::vector<ComplexD> psi(m + 1, ComplexD(0));
        for (std::size_t i = 1; i <= m; ++i) {
            psi[i] = ComplexD(coeff(rng));
        }
        auto base = compose_truncated(p, S(psi), m);
        PolynomialPrefix q = p;
        q.known[8].re += Rational(12345, 7);
        auto perturbed = compose_truncated(q, S(psi), m);
        for (std::size_t i = 0; i <= m; ++i) {
            CHECK(base[i].real() == perturbed[i].real());
            CHECK(base[i].imag() == perturbed[i].imag());
        }
    }
}

TEST_CASE("evaluate_exact") {
    CHECK(evaluate_exact(make_integer_prefix(1, {1, 1}), ComplexD(1)).real() == 2.0);
    CHECK(evaluate_exact(make_integer_prefix(2, {1, 2, 1}), ComplexD(1)).real() == 4.0);
    CHECK(evaluate_exact(make_integer_prefix(3, {1, 3, 3, 1}), ComplexD(-1)).real() == 0.0);
}

TEST_CASE("coefficient rescaling keeps huge prefixes finite") {
    PolynomialPrefix p;
    p.degree = 1;
    const BigInt huge = pow(BigInt(2), 1200);
    p.known.push_back(ExactComplex{Rational(huge), Rational(0)});
    p.known.push_back(ExactComplex{Rational(huge * 3), Rational(0)});
    auto wp = to_working_precision<ComplexD>(p, 1);
    CHECK(wp.shift > 0);
    CHECK(std::isfinite(wp.coeffs[0].real()));
    CHECK(std::isfinite(wp.coeffs[1].real()));
    CHECK(wp.coeffs[1].real() / wp.coeffs[0].real() == doctest::Approx(3.0));
}
