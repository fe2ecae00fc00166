#pragma once

#include <array>
#include <functional>

#include "octohls/nilgroup.hpp"
#include "octohls/octonion.hpp"

namespace octohls {

using Vec16 = std::array<double, 16>;

// Unit vector (zeta1, zeta2) in O^2.
struct SpherePoint {
    Octonion zeta1;
    Octonion zeta2;

    static SpherePoint north() { return {Octonion{}, Octonion::real(1.0)}; }
    static SpherePoint south() { return {Octonion{}, Octonion::real(-1.0)}; }

    Vec16 to_vec() const;
    static SpherePoint from_vec(const Vec16& v);
    double norm2() const { return oct_norm2(zeta1) + oct_norm2(zeta2); }
};

// zeta1 conj(eta1) + zeta2 conj(eta2)
Octonion pair_product(const SpherePoint& zeta, const SpherePoint& eta);

SpherePoint cayley(const GroupElement& u);
// Throws DomainError at the south pole.
GroupElement cayley_inv(const SpherePoint& zeta);

// 2^{Q-7} ((1+|z|^2)^2 + |t|^2)^{-Q/2}
double jac_cayley(const GroupElement& u);
// 2^{-7} |1+zeta2|^Q, the same Jacobian expressed at zeta = cayley(u)
double jac_cayley_sphere(const SpherePoint& zeta);
// Jacobian of cayley_inv at zeta; reciprocal of jac_cayley_sphere.
double jac_cayley_inv(const SpherePoint& zeta);

// 2^{-1/2} |1 - zeta . conj(eta)|^{1/2}
double sdist(const SpherePoint& zeta, const SpherePoint& eta);

// Right-hand side of the group/sphere distance relation:
// 2^{7/Q-1} jac(u)^{1/2Q} jac(v)^{1/2Q} gdist(u,v)
double distance_relation_rhs(const GroupElement& u, const GroupElement& v);

using GroupFunction = std::function<double(const GroupElement&)>;
using PointFunction = std::function<double(const SpherePoint&)>;

// f~(zeta) = f(C^{-1} zeta) |J_{C^{-1}}(zeta)|^{1/p}; p = +inf gives plain composition.
PointFunction lift_function(GroupFunction f, double p);
// f(u) = f~(C u) |J_C(u)|^{1/p}
GroupFunction unlift_function(PointFunction f, double p);

} // namespace octohls
