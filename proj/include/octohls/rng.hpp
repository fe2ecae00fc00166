#pragma once

#include <cstdint>

#include "octohls/cayley.hpp"

namespace octohls {

// Counter-based generator: draw t of sample i in stream s is a pure function of
// (seed, s, i, t), so results do not depend on evaluation order or thread schedule.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))), index_(index) {}

    std::uint64_t next_u64() { return mix(key_ ^ mix(index_ * 0x9e3779b97f4a7c15ULL + (++counter_))); }
    // in (0, 1)
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }
    double normal();

    static std::uint64_t mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
    std::uint64_t index_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Uniform point on S^15 from a normalized 16-dimensional Gaussian.
SpherePoint sample_sphere(CounterRng& rng);
Vec16 sample_sphere_vec(CounterRng& rng);

} // namespace octohls
