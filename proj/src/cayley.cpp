#include "octohls/cayley.hpp"

#include <cmath>
#include <limits>

#include "octohls/errors.hpp"

namespace octohls {

Vec16 SpherePoint::to_vec() const
{
    Vec16 v{};
    for (int i = 0; i < 8; ++i) {
        v[i] = zeta1.c[i];
        v[i + 8] = zeta2.c[i];
    }
    return v;
}

SpherePoint SpherePoint::from_vec(const Vec16& v)
{
    SpherePoint p;
    for (int i = 0; i < 8; ++i) {
        p.zeta1.c[i] = v[i];
        p.zeta2.c[i] = v[i + 8];
    }
    return p;
}

Octonion pair_product(const SpherePoint& zeta, const SpherePoint& eta)
{
    return zeta.zeta1 * oct_conj(eta.zeta1) + zeta.zeta2 * oct_conj(eta.zeta2);
}

SpherePoint cayley(const GroupElement& u)
{
    const double z2 = oct_norm2(u.z);
    const Octonion den = Octonion::real(1.0 + z2) - u.t;
    const Octonion num = Octonion::real(1.0 - z2) + u.t;
    return {oct_rdiv(2.0 * u.z, den), oct_rdiv(num, den)};
}

GroupElement cayley_inv(const SpherePoint& zeta)
{
    const Octonion one = Octonion::real(1.0);
    const Octonion den = one + zeta.zeta2;
    // |1 + zeta2| vanishes only at the south pole on the unit sphere
    if (!(oct_norm2(den) > 1e-300)) throw DomainError("cayley_inv: south pole is the point at infinity");
    return {oct_rdiv(zeta.zeta1, den), -oct_im(oct_rdiv(one - zeta.zeta2, den))};
}

double jac_cayley(const GroupElement& u)
{
    const double a = 1.0 + oct_norm2(u.z);
    return std::pow(2.0, kQ - 7.0) * std::pow(a * a + im_norm2(u.t), -kQ / 2.0);
}

double jac_cayley_sphere(const SpherePoint& zeta)
{
    return std::pow(2.0, -7.0) * std::pow(oct_norm2(Octonion::real(1.0) + zeta.zeta2), kQ / 2.0);
}

double jac_cayley_inv(const SpherePoint& zeta)
{
    const double j = jac_cayley_sphere(zeta);
    if (!(j > 0.0)) throw DomainError("jac_cayley_inv: south pole is the point at infinity");
    return 1.0 / j;
}

double sdist(const SpherePoint& zeta, const SpherePoint& eta)
{
    const Octonion w = pair_product(zeta, eta);
    return std::sqrt(0.5) * std::pow(oct_norm2(Octonion::real(1.0) - w), 0.25);
}

double distance_relation_rhs(const GroupElement& u, const GroupElement& v)
{
    return std::pow(2.0, 7.0 / kQ - 1.0) * std::pow(jac_cayley(u) * jac_cayley(v), 1.0 / (2.0 * kQ)) *
           gdist(u, v);
}

PointFunction lift_function(GroupFunction f, double p)
{
    if (!(p > 1.0)) throw DomainError("lift_function: exponent p must exceed 1");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    return [f = std::move(f), inv_p](const SpherePoint& zeta) {
        const GroupElement u = cayley_inv(zeta);
        return inv_p == 0.0 ? f(u) : f(u) * std::pow(jac_cayley_inv(zeta), inv_p);
    };
}

GroupFunction unlift_function(PointFunction f, double p)
{
    if (!(p > 1.0)) throw DomainError("unlift_function: exponent p must exceed 1");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    return [f = std::move(f), inv_p](const GroupElement& u) {
        const double v = f(cayley(u));
        return inv_p == 0.0 ? v : v * std::pow(jac_cayley(u), inv_p);
    };
}

} // namespace octohls
