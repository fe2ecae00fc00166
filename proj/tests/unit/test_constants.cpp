#include <doctest.h>

#include <cmath>
#include <numbers>

#include "octohls/constants.hpp"
#include "octohls/errors.hpp"
#include "octohls/spectra.hpp"

using namespace octohls;

TEST_SUITE("constants")
{
    TEST_CASE("parameters")
    {
        CHECK(make_hls_params(12).p() == doctest::Approx(1.375));
        CHECK(make_hls_params(12).sharp_regime());
        CHECK_FALSE(make_hls_params(8).sharp_regime());
        CHECK_THROWS_AS(make_hls_params(22), DomainError);
        CHECK_THROWS_AS(make_hls_params(0), DomainError);
        CHECK(sphere_measure() == doctest::Approx(2 * std::pow(std::numbers::pi, 8) / 5040));
    }

    TEST_CASE("group constant from plain tgamma")
    {
        for (double l : {4.0, 12.0, 16.0, 20.0}) {
            const double a = (44 - l) / 4;
            const double ref = std::pow(2.0, -4 * l / 22) * std::pow(sphere_measure(), l / 22) *
                               std::tgamma((22 - l) / 2) * 5040 / (std::tgamma(a) * std::tgamma(a - 3));
            CHECK(C_hls_group(l) == doctest::Approx(ref).epsilon(1e-12));
        }
        CHECK(C_hls_group(12) == doctest::Approx(0.4542334983496807).epsilon(1e-13));
        CHECK(C_hls_sphere(16) == doctest::Approx(1566.6762254307555).epsilon(1e-13));
    }

    TEST_CASE("sphere constant equals its spectral form")
    {
        for (double l = 1.0; l < 22; l += 1.5)
            CHECK(C_hls_sphere(l) == doctest::Approx(C_hls_sphere_spectral(l)).epsilon(1e-12));
    }

    TEST_CASE("Sobolev and log-Sobolev constants")
    {
        CHECK(C_sobolev(6) == doctest::Approx(1033.6379232606268).epsilon(1e-12));
        CHECK(C_sobolev(6) * c_d(6) * C_hls_sphere(16) == doctest::Approx(1.0));
        CHECK_THROWS_AS(C_sobolev(10), DomainError);
        CHECK_THROWS_AS(C_sobolev(0), DomainError);
        CHECK(C_logsobolev() == doctest::Approx(101555.4590863966).epsilon(1e-13));
    }
}
