#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "octohls/constants.hpp"
#include "octohls/errors.hpp"
#include "octohls/quadrature.hpp"

using namespace octohls;

TEST_SUITE("quadrature")
{
    TEST_CASE("Gauss-Legendre integrates degree 2n-1 exactly")
    {
        const auto r = gauss_legendre(6, -0.5, 2.0);
        for (int d = 0; d <= 11; ++d) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) s += r.w[i] * std::pow(r.x[i], d);
            CHECK(s == doctest::Approx((std::pow(2.0, d + 1) - std::pow(-0.5, d + 1)) / (d + 1)).epsilon(1e-13));
        }
        CHECK_THROWS_AS(gauss_legendre(0, 0, 1), DomainError);
    }

    TEST_CASE("Gauss-Jacobi moments")
    {
        const double a = 2.5, b = 2.5;
        const auto& r = gauss_jacobi(10, a, b);
        for (int d = 0; d <= 19; d += 2) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) s += r.w[i] * std::pow(r.x[i], d);
            // \int x^d (1-x^2)^a = B((d+1)/2, a+1) for even d
            CHECK(s == doctest::Approx(boost::math::beta((d + 1) / 2.0, a + 1)).epsilon(1e-12));
        }
    }

    TEST_CASE("sphere rule carries the full measure")
    {
        const auto rule = sphere_rule(24, 20);
        double total = 0.0, r2 = 0.0, re2 = 0.0, r4 = 0.0;
        for (int a = 0; a < rule->ntheta(); ++a)
            for (int b = 0; b < rule->nphi(); ++b) {
                const double w = rule->weight(a, b), r = rule->r[a], x = rule->x[b];
                total += w;
                r2 += w * r * r;
                re2 += w * r * r * x * x;
                r4 += w * std::pow(r, 4);
            }
        const double S = sphere_measure();
        CHECK(total == doctest::Approx(S).epsilon(1e-13));
        CHECK(r2 == doctest::Approx(S / 2).epsilon(1e-13));        // |zeta2|^2 averages 8/16
        CHECK(re2 == doctest::Approx(S / 16).epsilon(1e-13));      // one coordinate of 16
        CHECK(r4 == doctest::Approx(S * 8 * 10 / (16.0 * 18)).epsilon(1e-13));  // E|zeta2|^4 on S^15
        CHECK(sphere_rule(24, 20) == rule);
    }
}
