#include "gkmin/int_matrix.hpp"

#include <utility>

#include "gkmin/error.hpp"

namespace gkmin {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DomainError("IntMatrix: rows must form a square");
    std::size_t c = 0;
    for (long x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if ((*this)(r, c) != 0) return false;
    }
  }
  return true;
}

mpz_class IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  IntMatrix m = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n_ && m(pivot, k) == 0) ++pivot;
      if (pivot == n_) return 0;
      for (std::size_t c = 0; c < n_; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // Exact by Sylvester's identity.
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n_ - 1, n_ - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("IntMatrix product: size mismatch");
  IntMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < n_; ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).get_str();
    }
    out += ']';
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

} // namespace gkmin
