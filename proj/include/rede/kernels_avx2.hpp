#pragma once

#include <cstddef>

// AVX2+FMA kernel variants, float (8-wide) and double (4-wide). Compiled in
// a dedicated translation unit with -mavx2 -mfma; only reached through the
// dispatch layer after the runtime CPU check.
namespace rede::kernels::avx2 {

float dot(const float* a, const float* b, size_t n);
double dot(const double* a, const double* b, size_t n);

void axpy(float alpha, const float* x, float* y, size_t n);
void axpy(double alpha, const double* x, double* y, size_t n);

void scale(float alpha, float* x, size_t n);
void scale(double alpha, double* x, size_t n);

void matmul(const float* a, const float* b, float* c, size_t m, size_t k,
            size_t n, bool accumulate);
void matmul(const double* a, const double* b, double* c, size_t m, size_t k,
            size_t n, bool accumulate);

void matmul_nt(const float* a, const float* b, float* c, size_t m, size_t k,
               size_t n, bool accumulate);
void matmul_nt(const double* a, const double* b, double* c, size_t m, size_t k,
               size_t n, bool accumulate);

void matmul_tn(const float* a, const float* b, float* c, size_t m, size_t k,
               size_t n, bool accumulate);
void matmul_tn(const double* a, const double* b, double* c, size_t m, size_t k,
               size_t n, bool accumulate);

}  // namespace rede::kernels::avx2
