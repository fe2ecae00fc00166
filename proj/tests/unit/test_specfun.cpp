#include <doctest.h>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>
#include <boost/math/special_functions/jacobi.hpp>
#include <cmath>
#include <numbers>

#include "octohls/errors.hpp"
#include "octohls/specfun.hpp"

using namespace octohls;

namespace {

// Explicit sum P_k^{(a,b)}(x) = sum_s C(k+a, k-s) C(k+b, s) ((x-1)/2)^s ((x+1)/2)^{k-s}.
double jacobi_sum(int k, int a, int b, double x)
{
    double s = 0.0;
    for (int i = 0; i <= k; ++i)
        s += boost::math::binomial_coefficient<double>(k + a, k - i) *
             boost::math::binomial_coefficient<double>(k + b, i) * std::pow((x - 1) / 2, i) *
             std::pow((x + 1) / 2, k - i);
    return s;
}

} // namespace

TEST_SUITE("specfun")
{
    TEST_CASE("gamma helpers")
    {
        CHECK(gamma_ratio(7.5, 5.5) == doctest::Approx(6.5 * 5.5));
        CHECK(pochhammer(-2.5, 3) == doctest::Approx(-2.5 * -1.5 * -0.5));
        CHECK(pochhammer(3.0, 0) == 1.0);
        CHECK(digamma(1.0) == doctest::Approx(-0.57721566490153286));
        CHECK_THROWS_AS(digamma(-2.0), DomainError);
        CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    }

    TEST_CASE("terminating 2F1")
    {
        const double b = 1.7, c = 3.2, x = 0.4;
        CHECK(hyp2f1_terminating(0, b, c, x) == 1.0);
        CHECK(hyp2f1_terminating(2, b, c, x) ==
              doctest::Approx(1 - 2 * b * x / c + b * (b + 1) * x * x / (c * (c + 1))));
        // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
        CHECK(hyp2f1_terminating(5, b, c, 1.0) == doctest::Approx(pochhammer(c - b, 5) / pochhammer(c, 5)));
        CHECK_THROWS_AS(hyp2f1_terminating(-1, b, c, x), DomainError);
        CHECK_THROWS_AS(hyp2f1_terminating(3, b, -1.0, x), DomainError);
    }

    TEST_CASE("Gegenbauer and Jacobi recurrences match Boost and the explicit sum")
    {
        for (int n = 0; n <= 30; ++n)
            for (double x : {-0.93, -0.2, 0.0, 0.41, 0.999}) {
                CHECK(gegenbauer3(n, x) == doctest::Approx(boost::math::gegenbauer(n, 3.0, x)).epsilon(1e-12));
                for (int m : {0, 1, 4, 9}) {
                    const double ref = boost::math::jacobi(n, 3.0, 3.0 + m, x);
                    CHECK(jacobi33(n, m, x) == doctest::Approx(ref).epsilon(1e-11).scale(1e-300));
                    if (n <= 12) CHECK(jacobi33(n, m, x) == doctest::Approx(jacobi_sum(n, 3, 3 + m, x)).epsilon(1e-11));
                }
            }
        double all[11];
        gegenbauer3_normalized_all(10, 0.3, all);
        for (int n = 0; n <= 10; ++n) CHECK(all[n] == doctest::Approx(gegenbauer3_normalized(n, 0.3)));
        jacobi33_normalized_all(10, 2, -0.6, all);
        for (int k = 0; k <= 10; ++k) CHECK(all[k] == doctest::Approx(jacobi33_normalized(k, 2, -0.6)));
        CHECK(gegenbauer3_normalized(17, 1.0) == doctest::Approx(1.0));
        CHECK(jacobi33_normalized(17, 3, 1.0) == doctest::Approx(1.0));
    }

    TEST_CASE("zonal representations agree")
    {
        for (int j = 0; j <= 7; ++j)
            for (int k = 0; k <= j; ++k)
                for (double th : {0.15, 0.7, 1.3})
                    for (double ph : {0.05, 0.9, 2.2, 3.0}) {
                        const BisphericalIndex idx{j, k};
                        const double z = zonal(idx, {th, ph});
                        CHECK(zonal_rx(idx, std::cos(th), std::cos(ph)) == doctest::Approx(z).epsilon(1e-12));
                        CHECK(zonal_hypergeometric(idx, {th, ph}) == doctest::Approx(z).epsilon(1e-10).scale(1));
                        // the sin^{-5} phi prefactor amplifies roundoff near phi = 0
                        const double tol = 1e-10 + 1e-15 / std::pow(std::sin(ph), 5);
                        CHECK(std::abs(zonal_sine_sum(idx, {th, ph}) - z) < tol);
                    }
        CHECK(zonal({5, 2}, {0.0, 0.0}) == doctest::Approx(1.0));
        CHECK_THROWS_AS(zonal({1, 2}, {0.1, 0.1}), DomainError);
    }

    TEST_CASE("four-cosine coefficients: product and sum forms")
    {
        for (int n = 0; n <= 25; ++n)
            for (int i = 0; i < 4; ++i) CHECK(a_coeff(n, i) == doctest::Approx(a_coeff_sum_form(n, i)).epsilon(1e-12));
        CHECK_THROWS_AS(a_coeff(3, 4), DomainError);
    }
}
