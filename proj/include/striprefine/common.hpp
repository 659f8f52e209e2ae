#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace striprefine {

// Error raised for unreadable or malformed external inputs (files, headers,
// shape mismatches). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double f) const { return {x * f, y * f}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator*(double f, const Vec2& v) { return v * f; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Row-major 2D array. (i, j) = (row, column).
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols),
        v_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    assert(rows >= 0 && cols >= 0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return v_.empty(); }
  size_t size() const { return v_.size(); }
  bool same_shape(const Grid& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  T& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return v_[static_cast<size_t>(i) * cols_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return v_[static_cast<size_t>(i) * cols_ + j];
  }

  T* data() { return v_.data(); }
  const T* data() const { return v_.data(); }
  std::vector<T>& raw() { return v_; }
  const std::vector<T>& raw() const { return v_; }

  void fill(T value) { std::fill(v_.begin(), v_.end(), value); }

  bool operator==(const Grid& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> v_;
};

using GridD = Grid<double>;
using GridF = Grid<float>;
using GridU8 = Grid<uint8_t>;

}  // namespace striprefine
