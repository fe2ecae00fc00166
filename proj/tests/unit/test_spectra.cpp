#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <json.hpp>

#include "octohls/constants.hpp"
#include "octohls/errors.hpp"
#include "octohls/nilgroup.hpp"
#include "octohls/spectra.hpp"

using namespace octohls;

TEST_SUITE("spectra")
{
    TEST_CASE("trivial kernel")
    {
        CHECK(eig_K1(0, 0, 0.0) == doctest::Approx(sphere_measure()));
        CHECK(std::abs(eig_K1(3, 1, 0.0)) < 1e-12);
        CHECK(eig_quadrature(kernel_constant(2.0), 0, 0) == doctest::Approx(2 * sphere_measure()).epsilon(1e-12));
    }

    TEST_CASE("closed forms agree with the quadrature oracle")
    {
        QuadratureOptions opt;
        opt.nodes_theta = 96;
        opt.nodes_phi = 96;
        for (double alpha : {-0.5, 1.5, 3.7}) {
            const auto tabs = eig_quadrature_table({kernel_K1(alpha), kernel_K2(alpha)}, 4, opt);
            for (const auto& [key, v] : tabs[0].values)
                CHECK(v == doctest::Approx(eig_K1(key.first, key.second, alpha)).epsilon(1e-9).scale(1e-12));
            for (const auto& [key, v] : tabs[1].values)
                CHECK(v == doctest::Approx(eig_K2(key.first, key.second, alpha)).epsilon(1e-9).scale(1e-12));
        }
        CHECK_THROWS_AS(eig_quadrature(kernel_K1(5.5), 0, 0), DomainError);
    }

    TEST_CASE("frozen eigenvalues")
    {
        CHECK(eig_K1(0, 0, 2.0) == doctest::Approx(2.8239675643067126).epsilon(1e-13));
        CHECK(eig_K1(1, 0, 2.0) == doctest::Approx(0.6275483476237147).epsilon(1e-13));
        CHECK(eig_K1(3, 2, 1.5) == doctest::Approx(0.0004902326886451285).epsilon(1e-13));
        CHECK(eig_K2(0, 0, 2.0) == doctest::Approx(1.3596880865180467).epsilon(1e-13));
        CHECK(eig_K2(2, 1, 2.0) == doctest::Approx(0.018065785764925096).epsilon(1e-13));
        CHECK_THROWS_AS(eig_K1(1, 2, 1.0), DomainError);
        CHECK_THROWS_AS(eig_K1(0, 0, 5.5), DomainError);
    }

    TEST_CASE("second-kind closed form matches the naive product off its poles; ratio identity")
    {
        for (int j = 0; j <= 5; ++j)
            for (int k = 0; k <= j; ++k) {
                CHECK(eig_K2_naive(j, k, 1.3) == doctest::Approx(eig_K2(j, k, 1.3)).epsilon(1e-11));
                CHECK(eig_K1_ratio(j, k, 4.5) ==
                      doctest::Approx(eig_K1(j, k, 3.5) / eig_K1(j, k, 4.5)).epsilon(1e-11));
            }
        CHECK_THROWS_AS(eig_K1_ratio(0, 0, 3.0), DomainError);
    }

    TEST_CASE("bilinear margin values")
    {
        const auto m = bilinear_margin_terms(2, 2, 2.5);
        CHECK(m.value == doctest::Approx(-0.011370102694626478).epsilon(1e-11));
        CHECK(m.normalized() == doctest::Approx(-0.8044692737430168).epsilon(1e-11));
        const auto lim = bilinear_margin_terms(1, 1, 3.0);
        CHECK(lim.tag == "limit");
        CHECK(lim.value == doctest::Approx(0.31377417381185729).epsilon(1e-11));
        CHECK(std::abs(bilinear_margin(0, 0, 2.0)) < 1e-12);
        CHECK(bilinear_margin_terms(2, 0, 3.0).normalized() == doctest::Approx(0.20754716981132099).epsilon(1e-11));
        const auto zero = bilinear_margin_terms(3, 2, 3.0);
        CHECK(std::abs(zero.normalized()) < 1e-12);
    }

    TEST_CASE("intertwining spectrum and c_d")
    {
        CHECK(intertwining_spectrum(6, 2, 1) == doctest::Approx(8064.0).epsilon(1e-12));
        CHECK(intertwining_spectrum(6, 0, 0) == doctest::Approx(intertwining_spectrum(6, 0, 0)));
        CHECK(c_d(6) == doctest::Approx(6.1752182609468981e-07).epsilon(1e-12));
        CHECK_THROWS_AS(c_d(10), DomainError);
        CHECK_THROWS_AS(intertwining_spectrum(22, 0, 0), DomainError);
    }

    TEST_CASE("log-Sobolev gaps: digamma form vs endpoint limit")
    {
        CHECK(std::abs(logsob_gap(0, 0)) < 1e-14 * logsob_gap_constant());
        CHECK(logsob_gap(1, 0) == doctest::Approx(C_logsobolev()).epsilon(1e-13));
        for (auto [j, k] : {std::pair{1, 0}, {2, 1}, {3, 3}, {5, 2}})
            CHECK(logsob_gap_limit(j, k) == doctest::Approx(logsob_gap(j, k)).epsilon(1e-9));
        CHECK(logsob_gap(2, 1) == doctest::Approx(410909.01138034288).epsilon(1e-12));
        CHECK_THROWS_AS(logsob_gap_limit(1, 0, {}), DomainError);
    }

    TEST_CASE("table output")
    {
        const auto t = eig_table_closed_form(2, 1.5);
        CHECK(t.values.size() == 6);
        const std::string csv = t.to_csv();
        CHECK(csv.rfind("j,k,alpha,value,provenance\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
        const auto js = nlohmann::json::parse(t.to_json());
        CHECK(js["alpha"].get<double>() == 1.5);
        CHECK(js["values"]["2,1"].get<double>() == doctest::Approx(eig_K1(2, 1, 1.5)));
    }
}
