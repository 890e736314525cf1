#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gkmin {

/// Polynomial in q with arbitrary-precision integer coefficients.
/// coeffs()[k] is the coefficient of q^k; the highest stored coefficient is
/// nonzero unless the polynomial is zero (empty storage).
class QPoly {
public:
  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<mpz_class> coeffs);

  static QPoly constant(const mpz_class& c);
  static QPoly monomial(const mpz_class& c, int power);

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int k) const;
  mpz_class eval(const mpz_class& q) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly operator-() const;

  /// this += scale * q^shift * p
  void add_scaled(const QPoly& p, const mpz_class& scale, int shift);

  /// "1 + q^2" style; "0" for zero.
  std::string to_string() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly& a, const QPoly& b);

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

} // namespace gkmin
