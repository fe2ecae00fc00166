#pragma once

#include "octohls/octonion.hpp"

namespace octohls {

// Homogeneous dimension of the octonionic Heisenberg group: 8 + 2*7.
inline constexpr double kQ = 22.0;

struct GroupElement {
    Octonion z;
    ImOctonion t;
};

GroupElement gmul(const GroupElement& u, const GroupElement& v);
GroupElement ginv(const GroupElement& u);
double hnorm(const GroupElement& u);
// hnorm(ginv(v) * u)
double gdist(const GroupElement& u, const GroupElement& v);
// (|z-z'|^4 + |t-t'+2 Im z conj(z')|^2)^{1/4} with u = (z,t), v = (z',t')
double gdist_closed_form(const GroupElement& u, const GroupElement& v);
GroupElement dilate(double delta, const GroupElement& u);
GroupElement translate(const GroupElement& u0, const GroupElement& u);
// (-z (|z|^2 - t)^{-1}, -t / (|z|^4 + |t|^2)); right division.
GroupElement inversion(const GroupElement& u);

} // namespace octohls
