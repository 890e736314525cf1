#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gkmin {

/// Square matrix of arbitrary-precision integers, row-major, 0-based
/// element access (row r of the matrix is the (r+1)-st row in the usual
/// 1..n labelling).
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool is_upper_triangular() const;

  /// Determinant by fraction-free (Bareiss) elimination; exact.
  mpz_class determinant() const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
  std::size_t n_ = 0;
  std::vector<mpz_class> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

} // namespace gkmin
