#include "octohls/constants.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "octohls/errors.hpp"
#include "octohls/nilgroup.hpp"
#include "octohls/spectra.hpp"

namespace octohls {
namespace {

void check_lambda(double lambda, const char* who)
{
    if (!(lambda > 0.0 && lambda < kQ)) throw DomainError(std::string(who) + ": lambda must lie in (0, Q)");
}

} // namespace

double HlsParams::p() const { return 2.0 * kQ / (2.0 * kQ - lambda); }
bool HlsParams::sharp_regime() const { return lambda >= 12.0 && lambda < kQ; }

HlsParams make_hls_params(double lambda)
{
    check_lambda(lambda, "HlsParams");
    return {lambda};
}

double sphere_measure() { return 2.0 * std::pow(std::numbers::pi, 8) / 5040.0; }

double C_hls_group(double lambda)
{
    check_lambda(lambda, "C_hls_group");
    const double a = (2.0 * kQ - lambda) / 4.0;
    const double lg = boost::math::lgamma((kQ - lambda) / 2.0) + std::log(5040.0) - boost::math::lgamma(a) -
                      boost::math::lgamma(a - 3.0);
    return std::pow(2.0, -4.0 * lambda / kQ) * std::pow(sphere_measure(), lambda / kQ) * std::exp(lg);
}

double C_hls_sphere(double lambda)
{
    check_lambda(lambda, "C_hls_sphere");
    return std::pow(2.0, 15.0 * lambda / kQ) * C_hls_group(lambda);
}

double C_hls_sphere_spectral(double lambda)
{
    check_lambda(lambda, "C_hls_sphere_spectral");
    return std::pow(2.0, lambda / 2.0) * eig_K1(0, 0, lambda / 4.0) *
           std::pow(sphere_measure(), (lambda - kQ) / kQ);
}

double C_sobolev(double d)
{
    // at d = Q - 12 the factor Gamma((Q-d)/4 - 3) in c_d^{-1} has a pole and C''_d -> 0
    if (!(d > 0.0 && d < kQ - 12.0)) throw DomainError("C_sobolev: d must lie in (0, Q-12)");
    return 1.0 / (c_d(d) * C_hls_sphere(kQ - d));
}

double C_logsobolev()
{
    return std::pow(2.0, kQ / 2.0 + 3.0) * std::pow(std::numbers::pi, 8) /
           (kQ * boost::math::tgamma(kQ / 4.0) * boost::math::tgamma(kQ / 4.0 - 3.0));
}

} // namespace octohls
