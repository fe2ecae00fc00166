// Compiled with -mavx2 -mfma; reached only after the runtime CPU check.
#include <immintrin.h>

#include <utility>

#include "octohls/oct_table.hpp"
#include "octohls/simd.hpp"

namespace octohls::simd::avx2 {
namespace {

using detail::kOctTable;

template <bool conj_y, int I, int J>
inline void term(const __m256d* x, const __m256d* y, __m256d* acc)
{
    constexpr int idx = kOctTable.index[I][J];
    constexpr int sgn = (conj_y && J != 0) ? -kOctTable.sign[I][J] : kOctTable.sign[I][J];
    if constexpr (sgn > 0)
        acc[idx] = _mm256_fmadd_pd(x[I], y[J], acc[idx]);
    else
        acc[idx] = _mm256_fnmadd_pd(x[I], y[J], acc[idx]);
}

template <bool conj_y, int I, int... J>
inline void row(const __m256d* x, const __m256d* y, __m256d* acc, std::integer_sequence<int, J...>)
{
    (term<conj_y, I, J>(x, y, acc), ...);
}

template <bool conj_y, int... I>
inline void rows(const __m256d* x, const __m256d* y, __m256d* acc, std::integer_sequence<int, I...>)
{
    (row<conj_y, I>(x, y, acc, std::make_integer_sequence<int, 8>{}), ...);
}

// acc[index[i][j]] += sign * x_i * y_j, unrolled at compile time; conj_y flips y_1..y_7.
template <bool conj_y>
inline void oct_product_accumulate(const __m256d* x, const __m256d* y, __m256d* acc)
{
    rows<conj_y>(x, y, acc, std::make_integer_sequence<int, 8>{});
}

} // namespace

void oct_mul_batch(const double* a, const double* b, double* out, std::size_t n)
{
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4) {
        __m256d x[8], y[8], acc[8];
        for (int c = 0; c < 8; ++c) {
            x[c] = _mm256_loadu_pd(a + c * n + m);
            y[c] = _mm256_loadu_pd(b + c * n + m);
            acc[c] = _mm256_setzero_pd();
        }
        oct_product_accumulate<false>(x, y, acc);
        for (int c = 0; c < 8; ++c) _mm256_storeu_pd(out + c * n + m, acc[c]);
    }
    for (; m < n; ++m) {
        double acc[8] = {};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                acc[kOctTable.index[i][j]] += kOctTable.sign[i][j] * a[i * n + m] * b[j * n + m];
        for (int c = 0; c < 8; ++c) out[c * n + m] = acc[c];
    }
}

void pair_products(const double* zeta, const double* eta, double* re, double* abs2, double* d2, std::size_t n)
{
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4) {
        __m256d acc[8];
        for (int c = 0; c < 8; ++c) acc[c] = _mm256_setzero_pd();
        for (int h = 0; h < 2; ++h) {
            __m256d x[8], y[8];
            for (int c = 0; c < 8; ++c) {
                x[c] = _mm256_loadu_pd(zeta + (h * 8 + c) * n + m);
                y[c] = _mm256_loadu_pd(eta + (h * 8 + c) * n + m);
            }
            oct_product_accumulate<true>(x, y, acc);
        }
        __m256d im2 = _mm256_setzero_pd();
        for (int c = 1; c < 8; ++c) im2 = _mm256_fmadd_pd(acc[c], acc[c], im2);
        const __m256d om = _mm256_sub_pd(one, acc[0]);
        _mm256_storeu_pd(re + m, acc[0]);
        _mm256_storeu_pd(abs2 + m, _mm256_fmadd_pd(acc[0], acc[0], im2));
        _mm256_storeu_pd(d2 + m, _mm256_fmadd_pd(om, om, im2));
    }
    for (; m < n; ++m) {
        double w[8] = {};
        for (int h = 0; h < 2; ++h)
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    const int s = j == 0 ? kOctTable.sign[i][j] : -kOctTable.sign[i][j];
                    w[kOctTable.index[i][j]] += s * zeta[(h * 8 + i) * n + m] * eta[(h * 8 + j) * n + m];
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
    __m256d s = _mm256_setzero_pd();
    std::size_t m = 0;
    for (; m + 4 <= n; m += 4) s = _mm256_fmadd_pd(_mm256_loadu_pd(a + m), _mm256_loadu_pd(b + m), s);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, s);
    double tail = 0.0;
    for (; m < n; ++m) tail += a[m] * b[m];
    return ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3])) + tail;
}

} // namespace octohls::simd::avx2
