#include <doctest.h>

#include "helpers.hpp"
#include "octohls/cayley.hpp"
#include "octohls/errors.hpp"

using namespace octohls;
using octohls::test::max_abs_diff;
using octohls::test::random_group;

TEST_SUITE("cayley")
{
    TEST_CASE("identity goes to the north pole; south pole is excluded")
    {
        CHECK(max_abs_diff(cayley(GroupElement{}), SpherePoint::north()) == 0.0);
        CHECK_THROWS_AS(cayley_inv(SpherePoint::south()), DomainError);
        CHECK_THROWS_AS(jac_cayley_inv(SpherePoint::south()), DomainError);
        CHECK(sdist(SpherePoint::north(), SpherePoint::south()) == doctest::Approx(1.0));
        CHECK(sdist(SpherePoint::north(), SpherePoint::north()) == 0.0);
    }

    TEST_CASE("round trip and Jacobian forms")
    {
        CounterRng rng(13, 0, 0);
        for (int s = 0; s < 300; ++s) {
            const GroupElement u = random_group(rng);
            const SpherePoint z = cayley(u);
            CHECK(z.norm2() == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(max_abs_diff(cayley_inv(z), u) < 1e-11 * (1 + hnorm(u) * hnorm(u)));
            CHECK(jac_cayley_sphere(z) == doctest::Approx(jac_cayley(u)).epsilon(1e-11));
            CHECK(jac_cayley_inv(z) * jac_cayley(u) == doctest::Approx(1.0).epsilon(1e-11));
        }
    }

    TEST_CASE("distance relation holds in the complex line and at the identity")
    {
        CounterRng rng(13, 1, 0);
        for (int s = 0; s < 200; ++s) {
            GroupElement u{}, v{};
            u.z[0] = rng.normal();
            u.z[1] = rng.normal();
            u.t.c[0] = rng.normal();
            v.z[0] = rng.normal();
            v.z[1] = rng.normal();
            v.t.c[0] = rng.normal();
            CHECK(sdist(cayley(u), cayley(v)) == doctest::Approx(distance_relation_rhs(u, v)).epsilon(1e-12));
            const GroupElement w = random_group(rng);
            CHECK(sdist(cayley(GroupElement{}), cayley(w)) ==
                  doctest::Approx(distance_relation_rhs(GroupElement{}, w)).epsilon(1e-12));
        }
    }

    TEST_CASE("lift and unlift are inverse")
    {
        const GroupFunction f = [](const GroupElement& u) { return 1.0 / (1.0 + hnorm(u)); };
        const double p = 1.6;
        const GroupFunction back = unlift_function(lift_function(f, p), p);
        CounterRng rng(13, 2, 0);
        for (int s = 0; s < 50; ++s) {
            const GroupElement u = random_group(rng);
            CHECK(back(u) == doctest::Approx(f(u)).epsilon(1e-11));
        }
        CHECK_THROWS_AS(lift_function(f, 1.0), DomainError);
        CHECK_THROWS_AS(unlift_function([](const SpherePoint&) { return 1.0; }, 0.5), DomainError);
    }

    TEST_CASE("real part of the pair product from the distance kernel")
    {
        CounterRng rng(13, 3, 0);
        for (int s = 0; s < 1000; ++s) {
            const SpherePoint z = sample_sphere(rng), e = sample_sphere(rng);
            const Octonion w = pair_product(z, e);
            CHECK(std::abs(2 * oct_re(w) - (1 + oct_norm2(w) - oct_norm2(Octonion::real(1) - w))) < 1e-14);
            CHECK(oct_norm2(w) <= 1 + 1e-14);
        }
    }
}
