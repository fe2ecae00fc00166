#pragma once

#include <cmath>
#include <cstdint>

#include "octohls/cayley.hpp"
#include "octohls/rng.hpp"

namespace octohls::test {

inline Octonion random_oct(CounterRng& r)
{
    Octonion o;
    for (auto& c : o.c) c = r.normal();
    return o;
}

inline ImOctonion random_im(CounterRng& r)
{
    ImOctonion t;
    for (auto& c : t.c) c = r.normal();
    return t;
}

inline GroupElement random_group(CounterRng& r) { return {random_oct(r), random_im(r)}; }

inline double max_abs_diff(const Octonion& a, const Octonion& b)
{
    double m = 0.0;
    for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
    return m;
}

inline double max_abs_diff(const GroupElement& a, const GroupElement& b)
{
    double m = max_abs_diff(a.z, b.z);
    for (int i = 0; i < 7; ++i) m = std::max(m, std::abs(a.t.c[i] - b.t.c[i]));
    return m;
}

inline double max_abs_diff(const SpherePoint& a, const SpherePoint& b)
{
    return std::max(max_abs_diff(a.zeta1, b.zeta1), max_abs_diff(a.zeta2, b.zeta2));
}

} // namespace octohls::test
