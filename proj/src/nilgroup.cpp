#include "octohls/nilgroup.hpp"

#include <cmath>

#include "octohls/errors.hpp"

namespace octohls {

GroupElement gmul(const GroupElement& u, const GroupElement& v)
{
    return {u.z + v.z, u.t + v.t + 2.0 * oct_im(u.z * oct_conj(v.z))};
}

GroupElement ginv(const GroupElement& u) { return {-u.z, -u.t}; }

double hnorm(const GroupElement& u)
{
    const double z2 = oct_norm2(u.z);
    return std::pow(z2 * z2 + im_norm2(u.t), 0.25);
}

double gdist(const GroupElement& u, const GroupElement& v) { return hnorm(gmul(ginv(v), u)); }

double gdist_closed_form(const GroupElement& u, const GroupElement& v)
{
    const double dz2 = oct_norm2(u.z - v.z);
    const ImOctonion dt = u.t - v.t + 2.0 * oct_im(u.z * oct_conj(v.z));
    return std::pow(dz2 * dz2 + im_norm2(dt), 0.25);
}

GroupElement dilate(double delta, const GroupElement& u)
{
    if (!(delta > 0.0)) throw DomainError("dilate: delta must be positive");
    return {delta * u.z, (delta * delta) * u.t};
}

GroupElement translate(const GroupElement& u0, const GroupElement& u) { return gmul(u0, u); }

GroupElement inversion(const GroupElement& u)
{
    const double z2 = oct_norm2(u.z);
    const double n4 = z2 * z2 + im_norm2(u.t);
    if (!(n4 > 0.0)) throw DomainError("inversion: pole at the group identity");
    const Octonion w = Octonion::real(z2) - u.t;
    return {-oct_rdiv(u.z, w), (-1.0 / n4) * u.t};
}

} // namespace octohls
