#include "rede/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "rede/kernels_scalar.hpp"
#include "rede/logging.hpp"

#if defined(REDE_HAVE_AVX2)
#include "rede/kernels_avx2.hpp"
#endif

namespace rede::kernels {

bool avx2_available() {
#if defined(REDE_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend initial_backend() {
  const char* env = std::getenv("REDE_KERNEL");
  if (env != nullptr) {
    const std::string v(env);
    if (v == "scalar") return Backend::kScalar;
    if (v == "avx2") {
      if (avx2_available()) return Backend::kAvx2;
      log_warn("REDE_KERNEL=avx2 requested but AVX2+FMA not available; using scalar kernels");
      return Backend::kScalar;
    }
    if (v != "auto") {
      log_warn("unknown REDE_KERNEL value '" + v + "'; using auto detection");
    }
  }
  return avx2_available() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& backend_ref() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

Backend active_backend() { return backend_ref().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::kAvx2 && !avx2_available()) {
    log_warn("AVX2 backend requested but unavailable; keeping scalar");
    b = Backend::kScalar;
  }
  backend_ref().store(b, std::memory_order_relaxed);
}

std::string backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

#if defined(REDE_HAVE_AVX2)
#define REDE_DISPATCH(call_avx2, call_scalar) \
  do {                                        \
    if (active_backend() == Backend::kAvx2) { \
      return call_avx2;                       \
    }                                         \
    return call_scalar;                       \
  } while (0)
#else
#define REDE_DISPATCH(call_avx2, call_scalar) return call_scalar
#endif

template <typename T>
T dot(const T* a, const T* b, size_t n) {
  REDE_DISPATCH(avx2::dot(a, b, n), scalar::dot(a, b, n));
}

template <typename T>
void axpy(T alpha, const T* x, T* y, size_t n) {
  REDE_DISPATCH(avx2::axpy(alpha, x, y, n), scalar::axpy(alpha, x, y, n));
}

template <typename T>
void scale(T alpha, T* x, size_t n) {
  REDE_DISPATCH(avx2::scale(alpha, x, n), scalar::scale(alpha, x, n));
}

template <typename T>
void matmul(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
            bool accumulate) {
  REDE_DISPATCH(avx2::matmul(a, b, c, m, k, n, accumulate),
                scalar::matmul(a, b, c, m, k, n, accumulate));
}

template <typename T>
void matmul_nt(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
               bool accumulate) {
  REDE_DISPATCH(avx2::matmul_nt(a, b, c, m, k, n, accumulate),
                scalar::matmul_nt(a, b, c, m, k, n, accumulate));
}

template <typename T>
void matmul_tn(const T* a, const T* b, T* c, size_t m, size_t k, size_t n,
               bool accumulate) {
  REDE_DISPATCH(avx2::matmul_tn(a, b, c, m, k, n, accumulate),
                scalar::matmul_tn(a, b, c, m, k, n, accumulate));
}

#undef REDE_DISPATCH

template <typename T>
void softmax_rows(T* x, size_t rows, size_t cols) {
  scalar::softmax_rows(x, rows, cols);
}

// Explicit instantiations: the model runs in float32, tests and tolerance-
// sensitive checks in double.
template float dot<float>(const float*, const float*, size_t);
template double dot<double>(const double*, const double*, size_t);
template void axpy<float>(float, const float*, float*, size_t);
template void axpy<double>(double, const double*, double*, size_t);
template void scale<float>(float, float*, size_t);
template void scale<double>(double, double*, size_t);
template void matmul<float>(const float*, const float*, float*, size_t, size_t, size_t, bool);
template void matmul<double>(const double*, const double*, double*, size_t, size_t, size_t, bool);
template void matmul_nt<float>(const float*, const float*, float*, size_t, size_t, size_t, bool);
template void matmul_nt<double>(const double*, const double*, double*, size_t, size_t, size_t, bool);
template void matmul_tn<float>(const float*, const float*, float*, size_t, size_t, size_t, bool);
template void matmul_tn<double>(const double*, const double*, double*, size_t, size_t, size_t, bool);
template void softmax_rows<float>(float*, size_t, size_t);
template void softmax_rows<double>(double*, size_t, size_t);

}  // namespace rede::kernels
