#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "octohls/cayley.hpp"
#include "octohls/rng.hpp"
#include "octohls/simd.hpp"

using namespace octohls;

namespace {

std::vector<double> gaussian(std::size_t n, std::uint64_t stream)
{
    std::vector<double> v(n);
    CounterRng r(17, stream, 0);
    for (auto& x : v) x = r.normal();
    return v;
}

} // namespace

TEST_SUITE("simd")
{
    TEST_CASE("ISA names and selection")
    {
        CHECK(simd::isa_name(simd::Isa::Scalar) == "scalar");
        CHECK(simd::isa_name(simd::Isa::Avx2) == "avx2");
        if (!simd::avx2_available()) CHECK(simd::active_isa() == simd::Isa::Scalar);
    }

    TEST_CASE("scalar kernels match the octonion product")
    {
        const std::size_t n = 9;
        const auto a = gaussian(8 * n, 0), b = gaussian(8 * n, 1);
        std::vector<double> out(8 * n);
        simd::scalar::oct_mul_batch(a.data(), b.data(), out.data(), n);
        for (std::size_t m = 0; m < n; ++m) {
            Octonion x, y;
            for (int c = 0; c < 8; ++c) {
                x.c[c] = a[c * n + m];
                y.c[c] = b[c * n + m];
            }
            const Octonion p = x * y;
            for (int c = 0; c < 8; ++c) CHECK(out[c * n + m] == doctest::Approx(p.c[c]).epsilon(1e-14));
        }
        const auto z = gaussian(16 * n, 2), e = gaussian(16 * n, 3);
        std::vector<double> re(n), a2(n), d2(n);
        simd::scalar::pair_products(z.data(), e.data(), re.data(), a2.data(), d2.data(), n);
        for (std::size_t m = 0; m < n; ++m) {
            Vec16 u, v;
            for (int c = 0; c < 16; ++c) {
                u[c] = z[c * n + m];
                v[c] = e[c * n + m];
            }
            const Octonion w = pair_product(SpherePoint::from_vec(u), SpherePoint::from_vec(v));
            CHECK(re[m] == doctest::Approx(w.c[0]).epsilon(1e-13));
            CHECK(a2[m] == doctest::Approx(oct_norm2(w)).epsilon(1e-13));
            CHECK(d2[m] == doctest::Approx(oct_norm2(Octonion::real(1) - w)).epsilon(1e-13));
        }
    }

    TEST_CASE("AVX2 variant matches scalar reference for all tail lengths")
    {
        if (!simd::avx2_available()) return;
        for (std::size_t n = 0; n <= 37; ++n) {
            const auto a = gaussian(16 * n + 1, 10 + n), b = gaussian(16 * n + 1, 100 + n);
            std::vector<double> o1(8 * n + 1), o2(8 * n + 1);
            simd::scalar::oct_mul_batch(a.data(), b.data(), o1.data(), n);
            simd::avx2::oct_mul_batch(a.data(), b.data(), o2.data(), n);
            for (std::size_t i = 0; i < 8 * n; ++i) CHECK(o2[i] == doctest::Approx(o1[i]).epsilon(1e-14).scale(1));
            std::vector<double> r1(n), r2(n), a1(n), a2(n), d1(n), d2(n);
            simd::scalar::pair_products(a.data(), b.data(), r1.data(), a1.data(), d1.data(), n);
            simd::avx2::pair_products(a.data(), b.data(), r2.data(), a2.data(), d2.data(), n);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(r2[i] == doctest::Approx(r1[i]).epsilon(1e-13).scale(1));
                CHECK(a2[i] == doctest::Approx(a1[i]).epsilon(1e-13));
                CHECK(d2[i] == doctest::Approx(d1[i]).epsilon(1e-13));
            }
            CHECK(simd::avx2::dot(a.data(), b.data(), 16 * n + 1) ==
                  doctest::Approx(simd::scalar::dot(a.data(), b.data(), 16 * n + 1)).epsilon(1e-12).scale(1));
        }
    }
}
