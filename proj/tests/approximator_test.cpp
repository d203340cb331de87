#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "polyapprox/approximator.hpp"
#include "test_util.hpp"

using namespace polyapprox;

namespace {

// (1 + x/r_1) ... (1 + x/r_n) expanded exactly; r_i = t_i / 16.
struct FactorPoly {
    PolynomialPrefix prefix;
    double log_p1;  // sum ln(1 + 1/r_i)
};

FactorPoly random_real_rooted(std::mt19937& rng, double delta, std::size_t n) {
    std::uniform_int_distribution<int> t(static_cast<int>(std::ceil(16.0 * delta)), 160);
    std::vector<Rational> coeffs{Rational(1)};
    double log_p1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational r(t(rng), 16);
        log_p1 += std::log1p(1.0 / r.convert_to<double>());
        coeffs.push_back(Rational(0));
        const Rational inv = Rational(1) / r;
        for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
            coeffs[k] += coeffs[k - 1] * inv;
        }
    }
    return {make_rational_prefix(n, coeffs), log_p1};
}

}  // namespace

TEST_CASE("constant polynomial is recovered exactly") {
    auto p = make_integer_prefix(0, {7});
    auto est = approximate_log_p1<ComplexD>(p, RootRegion::real_rooted(0.5), 0.1);
    CHECK(est.log_value.real() == doctest::Approx(std::log(7.0)).epsilon(1e-14));
    CHECK(est.log_value.imag() == 0.0);

    auto p3 = make_integer_prefix(0, {3});
    auto v = approximate_p1<ComplexD>(p3, RootRegion::stable(0.5), 0.1);
    CHECK(v.value.real() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("(1+x)^40 via the real-rooted pipeline") {
    std::vector<BigInt> coeffs(41);
    coeffs[0] = 1;
    for (int k = 1; k <= 40; ++k) {
        coeffs[k] = coeffs[k - 1] * (41 - k) / k;
    }
    auto p = make_integer_prefix(40, coeffs);
    auto est = approximate_log_p1<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-3);
    CHECK(std::abs(est.log_value.real() - 40.0 * std::log(2.0)) <= 1e-3);
    CHECK(std::abs(est.log_value.imag()) <= 1e-3);
    CHECK(est.tail_bound <= 5e-4);
}

TEST_CASE("small exact cases") {
    auto p = make_integer_prefix(2, {1, 2, 1});
    auto est = approximate_p1<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-3);
    CHECK(std::abs(std::log(est.value.real() / 4.0)) <= 1e-3);

    auto q = make_integer_prefix(1, {1, 1});
    auto est2 = approximate_p1<ComplexD>(q, RootRegion::stable(0.9), 1e-2);
    CHECK(std::abs(std::log(est2.value.real() / 2.0)) <= 1e-2);
    const double oracle = evaluate_exact(q, ComplexD(1)).real();
    CHECK(oracle == 2.0);
}

TEST_CASE("estimate invariants") {
    auto p = make_integer_prefix(2, {1, 2, 1});
    auto est = approximate_p1<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-2);
    CHECK(est.value.real() == doctest::Approx(std::exp(est.log_value.real())));
    CHECK(est.tail_bound <= 0.5e-2);
    CHECK(est.order_used >= 1);
}

TEST_CASE("input validation") {
    auto p = make_integer_prefix(2, {0, 2, 1});
    CHECK_THROWS_AS(approximate_log_p1<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-2),
                    ZeroConstantTerm);
    auto q = make_integer_prefix(100, {1, 100, 4950});
    CHECK_THROWS_AS(approximate_log_p1<ComplexD>(q, RootRegion::real_rooted(0.5), 1e-3),
                    InsufficientCoefficients);
    auto ok = make_integer_prefix(2, {1, 2, 1});
    CHECK_THROWS_AS(approximate_log_p1<ComplexD>(ok, RootRegion::real_rooted(0.5), 1.5), Error);
    CHECK_THROWS_AS(
        approximate_log_p1<ComplexD>(ok, RootRegion::interval_avoiding(0.3), 1e-2),
        UnsupportedRegion);
}

TEST_CASE("derivative ratio closed forms") {
    SUBCASE("(1+x)^n gives n/2") {
        for (int n : {4, 10, 16}) {
            std::vector<BigInt> coeffs(n + 1);
            coeffs[0] = 1;
            for (int k = 1; k <= n; ++k) {
                coeffs[k] = coeffs[k - 1] * (n + 1 - k) / k;
            }
            auto p = make_integer_prefix(n, coeffs);
            auto ratio =
                approximate_derivative_ratio<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-2);
            CHECK(std::abs(std::log(ratio.real() / (n / 2.0))) <= 1e-2);
        }
    }
    SUBCASE("1 + x gives 1/2") {
        auto p = make_integer_prefix(1, {1, 1});
        auto ratio =
            approximate_derivative_ratio<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-2);
        CHECK(std::abs(std::log(ratio.real() / 0.5)) <= 1e-2);
    }
    SUBCASE("constant is rejected") {
        auto p = make_integer_prefix(0, {5});
        CHECK_THROWS_AS(
            approximate_derivative_ratio<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-2),
            ConstantPolynomial);
    }
    SUBCASE("a_1 = 0 is rejected") {
        auto p = make_integer_prefix(2, {1, 0, 1});
        CHECK_THROWS_AS(
            approximate_derivative_ratio<ComplexD>(p, RootRegion::real_rooted(0.5), 1e-2),
            ZeroConstantTerm);
    }
}

TEST_CASE("soundness on random real-rooted products") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<std::size_t> degree(1, 60);
    for (double delta : {0.1, 0.5}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto [prefix, log_p1] = random_real_rooted(rng, delta, degree(rng));
            for (double eps : {1e-1, 1e-3}) {
                auto est =
                    approximate_log_p1<ComplexD>(prefix, RootRegion::real_rooted(delta), eps);
                CHECK(std::abs(est.log_value.real() - log_p1) <= eps);
                CHECK(std::abs(est.log_value.imag()) <= eps);
            }
        }
    }
}

TEST_CASE("derivative closure: p' runs whenever p does") {
    std::mt19937 rng(103);
    std::uniform_int_distribution<std::size_t> degree(2, 40);
    for (int trial = 0; trial < 10; ++trial) {
        auto [prefix, log_p1] = random_real_rooted(rng, 0.3, degree(rng));
        (void)log_p1;
        CHECK_NOTHROW(
            approximate_derivative_ratio<ComplexD>(prefix, RootRegion::real_rooted(0.3), 1e-2));
    }
}

TEST_CASE("high-precision pipeline agrees with the default one") {
    std::mt19937 rng(107);
    auto [prefix, log_p1] = random_real_rooted(rng, 0.1, 50);
    const double eps = 1e-3;
    auto d = approximate_log_p1<ComplexD>(prefix, RootRegion::real_rooted(0.1), eps);
    auto q = approximate_log_p1<ComplexQ>(prefix, RootRegion::real_rooted(0.1), eps);
    const double q_re = to_double(real(q.log_value));
    // double-precision rounding stays far inside the eps/2 rounding budget
    CHECK(std::abs(d.log_value.real() - q_re) < 1e-9);
    CHECK(std::abs(q_re - log_p1) <= eps);
}

TEST_CASE("zero-free diagnostic reports a positive floor on a valid instance") {
    auto p = make_integer_prefix(3, {1, 3, 3, 1});
    CHECK(zero_free_diagnostic<ComplexD>(p, RootRegion::real_rooted(0.5)) > 0.0);
}
