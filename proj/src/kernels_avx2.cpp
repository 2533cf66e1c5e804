#include "rede/kernels_avx2.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>
#include <cstring>

namespace rede::kernels::avx2 {

namespace {

inline float hsum(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  __m128 shuf = _mm_movehdup_ps(lo);
  __m128 sums = _mm_add_ps(lo, shuf);
  shuf = _mm_movehl_ps(shuf, sums);
  sums = _mm_add_ss(sums, shuf);
  return _mm_cvtss_f32(sums);
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d high64 = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, high64));
}

}  // namespace

// ---------------------------------------------------------------------------
// dot
// ---------------------------------------------------------------------------

float dot(const float* a, const float* b, size_t n) {
  __m256 acc0 = _mm256_setzero_ps();
  __m256 acc1 = _mm256_setzero_ps();
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
    acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), acc1);
  }
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
  }
  float r = hsum(_mm256_add_ps(acc0, acc1));
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double dot(const double* a, const double* b, size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double r = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

// ---------------------------------------------------------------------------
// axpy / scale
// ---------------------------------------------------------------------------

void axpy(float alpha, const float* x, float* y, size_t n) {
  const __m256 va = _mm256_set1_ps(alpha);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 vy = _mm256_loadu_ps(y + i);
    vy = _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), vy);
    _mm256_storeu_ps(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpy(double alpha, const double* x, double* y, size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(float alpha, float* x, size_t n) {
  const __m256 va = _mm256_set1_ps(alpha);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(x + i, _mm256_mul_ps(va, _mm256_loadu_ps(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void scale(double alpha, double* x, size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

// ---------------------------------------------------------------------------
// matmul family. The axpy-style row updates vectorize over the n dimension;
// matmul_nt reduces to the dot kernel.
// ---------------------------------------------------------------------------

namespace {

template <typename T>
void matmul_impl(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
                 bool accumulate) {
  for (size_t i = 0; i < m; ++i) {
    T* crow = c + i * n;
    if (!accumulate) std::fill(crow, crow + n, T{});
    const T* arow = a + i * k;
    for (size_t l = 0; l < k; ++l) axpy(arow[l], b + l * n, crow, n);
  }
}

template <typename T>
void matmul_nt_impl(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
                    bool accumulate) {
  for (size_t i = 0; i < m; ++i) {
    const T* arow = a + i * k;
    T* crow = c + i * n;
    for (size_t j = 0; j < n; ++j) {
      const T d = dot(arow, b + j * k, k);
      crow[j] = accumulate ? crow[j] + d : d;
    }
  }
}

template <typename T>
void matmul_tn_impl(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
                    bool accumulate) {
  if (!accumulate) std::fill(c, c + k * n, T{});
  for (size_t i = 0; i < m; ++i) {
    const T* arow = a + i * k;
    const T* brow = b + i * n;
    for (size_t l = 0; l < k; ++l) axpy(arow[l], brow, c + l * n, n);
  }
}

}  // namespace

void matmul(const float* a, const float* b, float* c, size_t m, size_t k,
            size_t n, bool accumulate) {
  matmul_impl(a, b, c, m, k, n, accumulate);
}
void matmul(const double* a, const double* b, double* c, size_t m, size_t k,
            size_t n, bool accumulate) {
  matmul_impl(a, b, c, m, k, n, accumulate);
}

void matmul_nt(const float* a, const float* b, float* c, size_t m, size_t k,
               size_t n, bool accumulate) {
  matmul_nt_impl(a, b, c, m, k, n, accumulate);
}
void matmul_nt(const double* a, const double* b, double* c, size_t m, size_t k,
               size_t n, bool accumulate) {
  matmul_nt_impl(a, b, c, m, k, n, accumulate);
}

void matmul_tn(const float* a, const float* b, float* c, size_t m, size_t k,
               size_t n, bool accumulate) {
  matmul_tn_impl(a, b, c, m, k, n, accumulate);
}
void matmul_tn(const double* a, const double* b, double* c, size_t m, size_t k,
               size_t n, bool accumulate) {
  matmul_tn_impl(a, b, c, m, k, n, accumulate);
}

}  // namespace rede::kernels::avx2

#endif  // x86
