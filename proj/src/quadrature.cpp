#include "octohls/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "octohls/errors.hpp"

namespace octohls {
namespace {

QuadratureRule gsl_rule(const gsl_integration_fixed_type* type, int n, double a, double b, double alpha,
                        double beta)
{
    if (n < 1) throw DomainError("quadrature: order must be positive");
    gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(type, n, a, b, alpha, beta);
    if (ws == nullptr) throw DomainError("quadrature: invalid rule parameters");
    QuadratureRule r;
    r.x.assign(gsl_integration_fixed_nodes(ws), gsl_integration_fixed_nodes(ws) + n);
    r.w.assign(gsl_integration_fixed_weights(ws), gsl_integration_fixed_weights(ws) + n);
    gsl_integration_fixed_free(ws);
    return r;
}

std::mutex g_cache_mutex;

} // namespace

QuadratureRule gauss_legendre(int n, double a, double b)
{
    static std::map<int, QuadratureRule> cache;
    const QuadratureRule* base;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, gsl_rule(gsl_integration_fixed_legendre, n, -1.0, 1.0, 0.0, 0.0)).first;
        base = &it->second;
    }
    QuadratureRule r = *base;
    const double h = 0.5 * (b - a), m = 0.5 * (b + a);
    for (int i = 0; i < n; ++i) {
        r.x[i] = m + h * r.x[i];
        r.w[i] *= h;
    }
    return r;
}

const QuadratureRule& gauss_jacobi(int n, double alpha, double beta)
{
    static std::map<std::tuple<int, double, double>, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    const auto key = std::make_tuple(n, alpha, beta);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, gsl_rule(gsl_integration_fixed_jacobi, n, -1.0, 1.0, alpha, beta)).first;
    return it->second;
}

std::shared_ptr<const SphereRule> sphere_rule(int ntheta, int nphi)
{
    static std::map<std::pair<int, int>, std::shared_ptr<const SphereRule>> cache;
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache.find({ntheta, nphi});
        if (it != cache.end()) return it->second;
    }
    constexpr double pi = std::numbers::pi;
    const double s7 = std::pow(pi, 4) / 3.0;          // |S^7|
    const double s6 = 16.0 * std::pow(pi, 3) / 15.0; // |S^6|
    auto rule = std::make_shared<SphereRule>();
    const QuadratureRule gu = gauss_legendre(ntheta, -1.0, 1.0);
    for (int a = 0; a < ntheta; ++a) {
        const double u = gu.x[a];
        rule->u.push_back(u);
        rule->r.push_back(std::sqrt(0.5 * (1.0 + u)));
        rule->wtheta.push_back(gu.w[a] * std::pow(1.0 - u * u, 3) / 256.0 * s7);
    }
    const QuadratureRule& gx = gauss_jacobi(nphi, 2.5, 2.5);
    for (int b = 0; b < nphi; ++b) {
        rule->x.push_back(gx.x[b]);
        rule->wphi.push_back(gx.w[b] * s6);
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return cache.emplace(std::make_pair(ntheta, nphi), rule).first->second;
}

} // namespace octohls
