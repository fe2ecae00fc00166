#include "octohls/oct_table.hpp"
#include "octohls/simd.hpp"

namespace octohls::simd {

using detail::kOctTable;

namespace scalar {

void oct_mul_batch(const double* a, const double* b, double* out, std::size_t n)
{
    for (std::size_t m = 0; m < n; ++m) {
        double acc[8] = {};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                acc[kOctTable.index[i][j]] += kOctTable.sign[i][j] * a[i * n + m] * b[j * n + m];
        for (int c = 0; c < 8; ++c) out[c * n + m] = acc[c];
    }
}

void pair_products(const double* zeta, const double* eta, double* re, double* abs2, double* d2, std::size_t n)
{
    for (std::size_t m = 0; m < n; ++m) {
        double w[8] = {};
        for (int h = 0; h < 2; ++h) {
            const double* x = zeta + h * 8 * n;
            const double* y = eta + h * 8 * n;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    const int s = j == 0 ? kOctTable.sign[i][j] : -kOctTable.sign[i][j];
                    w[kOctTable.index[i][j]] += s * x[i * n + m] * y[j * n + m];
                }
        }
        double im2 = 0.0;
        for (int c = 1; c < 8; ++c) im2 += w[c] * w[c];
        re[m] = w[0];
        abs2[m] = w[0] * w[0] + im2;
        d2[m] = (1.0 - w[0]) * (1.0 - w[0]) + im2;
    }
}

double dot(const double* a, const double* b, std::size_t n)
{
    // four interleaved partial sums, matching the vector lane layout
    double s[4] = {};
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4)
        for (int l = 0; l < 4; ++l) s[l] += a[m + l] * b[m + l];
    double tail = 0.0;
    for (; m < n; ++m) tail += a[m] * b[m];
    return ((s[0] + s[1]) + (s[2] + s[3])) + tail;
}

} // namespace scalar

bool avx2_available()
{
#if defined(OCTOHLS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Isa active_isa() { return avx2_available() ? Isa::Avx2 : Isa::Scalar; }

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void oct_mul_batch(const double* a, const double* b, double* out, std::size_t n, Isa isa)
{
#ifdef OCTOHLS_HAVE_AVX2
    if (isa == Isa::Avx2 && avx2_available()) return avx2::oct_mul_batch(a, b, out, n);
#endif
    (void)isa;
    scalar::oct_mul_batch(a, b, out, n);
}

void pair_products(const double* zeta, const double* eta, double* re, double* abs2, double* d2, std::size_t n,
                   Isa isa)
{
#ifdef OCTOHLS_HAVE_AVX2
    if (isa == Isa::Avx2 && avx2_available()) return avx2::pair_products(zeta, eta, re, abs2, d2, n);
#endif
    (void)isa;
    scalar::pair_products(zeta, eta, re, abs2, d2, n);
}

double dot(const double* a, const double* b, std::size_t n, Isa isa)
{
#ifdef OCTOHLS_HAVE_AVX2
    if (isa == Isa::Avx2 && avx2_available()) return avx2::dot(a, b, n);
#endif
    (void)isa;
    return scalar::dot(a, b, n);
}

} // namespace octohls::simd
