#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rede {

// Dense row-major matrix. The compute kernels operate on raw pointers; this
// is just the owning container with shape checks.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols, T value = T{})
      : rows_(rows), cols_(cols), d_(rows * cols, value) {}

  static Mat from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    size_t i = 0;
    for (const auto& r : rows) {
      assert(r.size() == m.cols_);
      size_t j = 0;
      for (const T& v : r) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }

  T* data() { return d_.data(); }
  const T* data() const { return d_.data(); }
  T* row(size_t i) {
    assert(i < rows_);
    return d_.data() + i * cols_;
  }
  const T* row(size_t i) const {
    assert(i < rows_);
    return d_.data() + i * cols_;
  }

  T& operator()(size_t i, size_t j) {
    assert(i < rows_ && j < cols_);
    return d_[i * cols_ + j];
  }
  const T& operator()(size_t i, size_t j) const {
    assert(i < rows_ && j < cols_);
    return d_[i * cols_ + j];
  }

  void fill(T value) { d_.assign(d_.size(), value); }
  bool same_shape(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<T> d_;
};

}  // namespace rede
