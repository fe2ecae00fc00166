#include <doctest.h>

#include "helpers.hpp"
#include "octohls/errors.hpp"
#include "octohls/nilgroup.hpp"

using namespace octohls;
using octohls::test::max_abs_diff;
using octohls::test::random_group;

TEST_SUITE("nilgroup")
{
    TEST_CASE("explicit products")
    {
        // (e1, 0)(e2, 0) = (e1 + e2, 2 Im(e1 conj(e2))) = (e1 + e2, -2 e1 e2)
        const GroupElement u{Octonion::unit(1), {}}, v{Octonion::unit(2), {}};
        const GroupElement w = gmul(u, v);
        const Octonion e12 = Octonion::unit(1) * Octonion::unit(2);
        CHECK(w.z[1] == 1.0);
        CHECK(w.z[2] == 1.0);
        for (int i = 0; i < 7; ++i) CHECK(w.t.c[i] == doctest::Approx(-2.0 * e12.c[i + 1]));
        // a real z commutes: no t-part
        const GroupElement a{Octonion::real(2), {}}, b{Octonion::real(-3), {}};
        CHECK(im_norm(gmul(a, b).t) == 0.0);
        CHECK(hnorm(GroupElement{{}, ImOctonion{{4, 0, 0, 0, 0, 0, 0}}}) == doctest::Approx(2.0));
    }

    TEST_CASE("group axioms and gauge")
    {
        CounterRng rng(11, 0, 0);
        for (int s = 0; s < 200; ++s) {
            const GroupElement u = random_group(rng), v = random_group(rng), w = random_group(rng);
            CHECK(max_abs_diff(gmul(gmul(u, v), w), gmul(u, gmul(v, w))) < 1e-12);
            CHECK(max_abs_diff(gmul(u, ginv(u)), GroupElement{}) < 1e-13);
            CHECK(gdist(u, v) == doctest::Approx(gdist_closed_form(u, v)).epsilon(1e-12));
            CHECK(gdist(translate(w, u), translate(w, v)) == doctest::Approx(gdist(u, v)).epsilon(1e-11));
            CHECK(hnorm(dilate(0.37, u)) == doctest::Approx(0.37 * hnorm(u)).epsilon(1e-13));
            CHECK(hnorm(ginv(u)) == doctest::Approx(hnorm(u)).epsilon(1e-14));
        }
    }

    TEST_CASE("inversion is an involution with reciprocal norm")
    {
        CounterRng rng(11, 1, 0);
        for (int s = 0; s < 200; ++s) {
            const GroupElement u = random_group(rng);
            CHECK(hnorm(inversion(u)) * hnorm(u) == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(max_abs_diff(inversion(inversion(u)), u) < 1e-11 * (1 + hnorm(u) * hnorm(u)));
        }
        CHECK_THROWS_AS(inversion(GroupElement{}), DomainError);
    }

    TEST_CASE("dilate rejects nonpositive scale")
    {
        CHECK_THROWS_AS(dilate(0.0, GroupElement{}), DomainError);
        CHECK_THROWS_AS(dilate(-1.0, GroupElement{}), DomainError);
    }
}
