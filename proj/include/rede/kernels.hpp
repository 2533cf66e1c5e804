#pragma once

#include <cstddef>
#include <string>

#include "rede/mat.hpp"

// Arithmetic kernels behind the attention/encoder math. Every kernel has a
// scalar reference implementation and (on x86-64 with AVX2+FMA) a vectorized
// variant; the backend is picked once at startup from CPU capabilities and
// can be overridden with REDE_KERNEL=scalar|avx2 or set_backend(). SIMD and
// scalar variants are equivalence-tested against each other in
// tests/test_kernels.cpp (bitwise equality is not required: accumulation
// order differs).
namespace rede::kernels {

enum class Backend { kScalar, kAvx2 };

bool avx2_available();
Backend active_backend();
void set_backend(Backend b);
std::string backend_name(Backend b);

// ---------------------------------------------------------------------------
// Vector kernels (contiguous spans)
// ---------------------------------------------------------------------------

template <typename T>
T dot(const T* a, const T* b, size_t n);

// y += alpha * x
template <typename T>
void axpy(T alpha, const T* x, T* y, size_t n);

// x *= alpha
template <typename T>
void scale(T alpha, T* x, size_t n);

// ---------------------------------------------------------------------------
// Matrix kernels (row-major). With accumulate=false, C is overwritten.
// ---------------------------------------------------------------------------

// C(m x n) = A(m x k) * B(k x n)
template <typename T>
void matmul(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
            bool accumulate = false);

// C(m x n) = A(m x k) * B(n x k)^T
template <typename T>
void matmul_nt(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
               bool accumulate = false);

// C(k x n) = A(m x k)^T * B(m x n)
template <typename T>
void matmul_tn(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
               bool accumulate = false);

// ---------------------------------------------------------------------------
// Row-wise softmax (always scalar: dominated by exp). In place.
// ---------------------------------------------------------------------------

template <typename T>
void softmax_rows(T* x, size_t rows, size_t cols);

// ---------------------------------------------------------------------------
// Shape-checked wrappers over Mat
// ---------------------------------------------------------------------------

template <typename T>
void matmul(const Mat<T>& a, const Mat<T>& b, Mat<T>& c,
            bool accumulate = false) {
  assert(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols());
  matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols(),
         accumulate);
}

template <typename T>
void matmul_nt(const Mat<T>& a, const Mat<T>& b, Mat<T>& c,
               bool accumulate = false) {
  assert(a.cols() == b.cols() && c.rows() == a.rows() && c.cols() == b.rows());
  matmul_nt(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.rows(),
            accumulate);
}

template <typename T>
void matmul_tn(const Mat<T>& a, const Mat<T>& b, Mat<T>& c,
               bool accumulate = false) {
  assert(a.rows() == b.rows() && c.rows() == a.cols() && c.cols() == b.cols());
  matmul_tn(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols(),
            accumulate);
}

template <typename T>
void softmax_rows(Mat<T>& x) {
  softmax_rows(x.data(), x.rows(), x.cols());
}

}  // namespace rede::kernels
