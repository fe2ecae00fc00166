#pragma once

#include <cstddef>
#include <string>

// Batch kernels with a scalar reference and an AVX2/FMA variant selected at runtime.
// Arrays are structure-of-arrays: component c of element m lives at p[c * n + m].
namespace octohls::simd {

enum class Isa { Scalar, Avx2 };

bool avx2_available();
Isa active_isa();
std::string isa_name(Isa isa);

// out = a * b for n octonions (8 x n arrays)
void oct_mul_batch(const double* a, const double* b, double* out, std::size_t n, Isa isa = active_isa());

// w = zeta1 conj(eta1) + zeta2 conj(eta2) for n pairs of sphere points (16 x n arrays);
// writes Re w, |w|^2 and |1 - w|^2.
void pair_products(const double* zeta, const double* eta, double* re, double* abs2, double* d2, std::size_t n,
                   Isa isa = active_isa());

double dot(const double* a, const double* b, std::size_t n, Isa isa = active_isa());

namespace scalar {
void oct_mul_batch(const double* a, const double* b, double* out, std::size_t n);
void pair_products(const double* zeta, const double* eta, double* re, double* abs2, double* d2, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
} // namespace scalar

namespace avx2 {
void oct_mul_batch(const double* a, const double* b, double* out, std::size_t n);
void pair_products(const double* zeta, const double* eta, double* re, double* abs2, double* d2, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
} // namespace avx2

} // namespace octohls::simd
