#include "octohls/rng.hpp"

#include <cmath>
#include <numbers>

namespace octohls {

double CounterRng::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller
    const double u1 = uniform(), u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = rad * std::sin(ang);
    has_spare_ = true;
    return rad * std::cos(ang);
}

Vec16 sample_sphere_vec(CounterRng& rng)
{
    Vec16 v;
    double n2 = 0.0;
    for (double& c : v) {
        c = rng.normal();
        n2 += c * c;
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (double& c : v) c *= inv;
    return v;
}

SpherePoint sample_sphere(CounterRng& rng) { return SpherePoint::from_vec(sample_sphere_vec(rng)); }

} // namespace octohls
