#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "octohls/errors.hpp"
#include "octohls/octonion.hpp"

using namespace octohls;
using octohls::test::max_abs_diff;
using octohls::test::random_oct;

namespace {

// Runtime Cayley-Dickson doubling on plain vectors, (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
std::vector<double> cd_conj(std::vector<double> x)
{
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
    return x;
}

std::vector<double> cd_mul(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    std::vector<double> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    std::vector<double> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    const auto ac = cd_mul(a, c), db = cd_mul(cd_conj(d), b), da = cd_mul(d, a), bc = cd_mul(b, cd_conj(c));
    std::vector<double> r(n);
    for (std::size_t i = 0; i < h; ++i) {
        r[i] = ac[i] - db[i];
        r[i + h] = da[i] + bc[i];
    }
    return r;
}

} // namespace

TEST_SUITE("octonion")
{
    TEST_CASE("basis table: unit, squares, anticommutation")
    {
        for (int i = 0; i < 8; ++i) {
            CHECK(kOctTable.index[0][i] == i);
            CHECK(kOctTable.index[i][0] == i);
            CHECK(kOctTable.sign[0][i] == 1);
            CHECK(kOctTable.sign[i][0] == 1);
        }
        for (int i = 1; i < 8; ++i) {
            CHECK(kOctTable.index[i][i] == 0);
            CHECK(kOctTable.sign[i][i] == -1);
            bool seen[8] = {};
            for (int j = 0; j < 8; ++j) seen[kOctTable.index[i][j]] = true;
            for (bool s : seen) CHECK(s);
            for (int j = 1; j < 8; ++j) {
                if (j == i) continue;
                CHECK(kOctTable.index[i][j] == kOctTable.index[j][i]);
                CHECK(kOctTable.sign[i][j] == -kOctTable.sign[j][i]);
            }
        }
    }

    TEST_CASE("product agrees with runtime doubling oracle")
    {
        CounterRng rng(7, 0, 0);
        for (int s = 0; s < 200; ++s) {
            const Octonion x = random_oct(rng), y = random_oct(rng);
            const auto ref = cd_mul(std::vector<double>(x.c.begin(), x.c.end()),
                                    std::vector<double>(y.c.begin(), y.c.end()));
            const Octonion p = x * y;
            for (int i = 0; i < 8; ++i) CHECK(p.c[i] == doctest::Approx(ref[i]).epsilon(1e-14));
        }
    }

    TEST_CASE("normed, alternative, Moufang, not associative")
    {
        CounterRng rng(7, 1, 0);
        double worst = 0.0;
        for (int s = 0; s < 500; ++s) {
            const Octonion x = random_oct(rng), y = random_oct(rng), z = random_oct(rng);
            worst = std::max(worst, std::abs(oct_norm2(x * y) - oct_norm2(x) * oct_norm2(y)) /
                                        (oct_norm2(x) * oct_norm2(y)));
            worst = std::max(worst, max_abs_diff((x * x) * y, x * (x * y)));
            worst = std::max(worst, max_abs_diff((y * x) * x, y * (x * x)));
            worst = std::max(worst, max_abs_diff((x * y) * x, x * (y * x)));
            worst = std::max(worst, max_abs_diff(z * (x * (z * y)), ((z * x) * z) * y));
            worst = std::max(worst, max_abs_diff(x * (z * (y * z)), ((x * z) * y) * z));
            worst = std::max(worst, max_abs_diff((z * x) * (y * z), (z * (x * y)) * z));
            worst = std::max(worst, max_abs_diff(oct_conj(x * y), oct_conj(y) * oct_conj(x)));
        }
        CHECK(worst < 1e-12);

        double assoc = 0.0;
        for (int i = 1; i < 8; ++i)
            for (int j = 1; j < 8; ++j)
                for (int k = 1; k < 8; ++k)
                    assoc = std::max(assoc, oct_norm(oct_associator(Octonion::unit(i), Octonion::unit(j),
                                                                    Octonion::unit(k))));
        CHECK(assoc == doctest::Approx(2.0));
    }

    TEST_CASE("quaternionic subalgebra is associative")
    {
        CounterRng rng(7, 2, 0);
        for (int s = 0; s < 100; ++s) {
            Octonion x, y, z;
            for (int i = 0; i < 4; ++i) {
                x.c[i] = rng.normal();
                y.c[i] = rng.normal();
                z.c[i] = rng.normal();
            }
            CHECK(oct_norm(oct_associator(x, y, z)) < 1e-13);
        }
    }

    TEST_CASE("inverse and division")
    {
        CounterRng rng(7, 3, 0);
        const Octonion a = random_oct(rng), b = random_oct(rng);
        CHECK(max_abs_diff(b * oct_inv(b), Octonion::real(1)) < 1e-14);
        CHECK(max_abs_diff(oct_inv(b) * b, Octonion::real(1)) < 1e-14);
        CHECK(max_abs_diff(oct_rdiv(a, b) * b, a) < 1e-13);
        CHECK(max_abs_diff(b * oct_ldiv(a, b), a) < 1e-13);
        CHECK_THROWS_AS(oct_inv(Octonion{}), DomainError);
    }
}
