#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

// Scalar reference kernels. These define the semantics; the AVX2 variants
// must agree with them up to floating-point reassociation.
namespace rede::kernels::scalar {

template <typename T>
T dot(const T* a, const T* b, size_t n) {
  T acc{};
  for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

template <typename T>
void axpy(T alpha, const T* x, T* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

template <typename T>
void scale(T alpha, T* x, size_t n) {
  for (size_t i = 0; i < n; ++i) x[i] *= alpha;
}

template <typename T>
void matmul(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
            bool accumulate) {
  for (size_t i = 0; i < m; ++i) {
    T* crow = c + i * n;
    if (!accumulate) std::fill(crow, crow + n, T{});
    const T* arow = a + i * k;
    for (size_t l = 0; l < k; ++l) {
      const T al = arow[l];
      const T* brow = b + l * n;
      for (size_t j = 0; j < n; ++j) crow[j] += al * brow[j];
    }
  }
}

template <typename T>
void matmul_nt(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
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
void matmul_tn(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
               bool accumulate) {
  if (!accumulate) std::fill(c, c + k * n, T{});
  for (size_t i = 0; i < m; ++i) {
    const T* arow = a + i * k;
    const T* brow = b + i * n;
    for (size_t l = 0; l < k; ++l) axpy(arow[l], brow, c + l * n, n);
  }
}

template <typename T>
void softmax_rows(T* x, size_t rows, size_t cols) {
  for (size_t i = 0; i < rows; ++i) {
    T* r = x + i * cols;
    T mx = r[0];
    for (size_t j = 1; j < cols; ++j) mx = std::max(mx, r[j]);
    T sum{};
    for (size_t j = 0; j < cols; ++j) {
      r[j] = std::exp(r[j] - mx);
      sum += r[j];
    }
    const T inv = T(1) / sum;
    for (size_t j = 0; j < cols; ++j) r[j] *= inv;
  }
}

}  // namespace rede::kernels::scalar
