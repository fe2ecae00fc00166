#include "octohls/octonion.hpp"

#include "octohls/errors.hpp"

namespace octohls {

Octonion oct_inv(const Octonion& x)
{
    const double n2 = oct_norm2(x);
    if (!(n2 > 0.0)) throw DomainError("oct_inv: zero octonion is not invertible");
    return (1.0 / n2) * oct_conj(x);
}

Octonion oct_rdiv(const Octonion& a, const Octonion& b) { return a * oct_inv(b); }
Octonion oct_ldiv(const Octonion& a, const Octonion& b) { return oct_inv(b) * a; }

Octonion oct_associator(const Octonion& x, const Octonion& y, const Octonion& z)
{
    return (x * y) * z - x * (y * z);
}

} // namespace octohls
