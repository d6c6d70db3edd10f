#include "bibdopt/matrix.hpp"

#include <cstdlib>
#include <numeric>

namespace bibdopt {

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::has_zero_row_sums() const {
  for (int i = 0; i < n_; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < n_; ++j) sum += (*this)(i, j);
    if (sum != 0) return false;
  }
  return true;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::max_abs() const {
  std::int64_t m = 0;
  for (auto x : a_) m = std::max(m, std::abs(x));
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

IntMatrix operator*(std::int64_t factor, IntMatrix m) {
  for (auto& x : m.a_) x *= factor;
  return m;
}

}  // namespace bibdopt
