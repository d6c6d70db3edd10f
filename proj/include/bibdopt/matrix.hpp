#pragma once

#include <cstdint>
#include <vector>

namespace bibdopt {

// Dense square matrix of exact machine integers. Laplacian and concurrence
// entries stay tiny at every scale this library accepts.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }

  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const;
  bool has_zero_row_sums() const;
  std::int64_t trace() const;
  std::int64_t max_abs() const;

  IntMatrix& operator+=(const IntMatrix& other);
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator*(std::int64_t factor, IntMatrix m);

  bool operator==(const IntMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

}  // namespace bibdopt
