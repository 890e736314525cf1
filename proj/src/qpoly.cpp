#include "gkmin/qpoly.hpp"

#include <algorithm>

#include "gkmin/error.hpp"

namespace gkmin {

QPoly::QPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpz_class& c) { return QPoly(std::vector<mpz_class>{c}); }

QPoly QPoly::monomial(const mpz_class& c, int power) {
  if (power < 0) throw DomainError("negative exponent in QPoly::monomial");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return QPoly(std::move(coeffs));
}

mpz_class QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class QPoly::eval(const mpz_class& q) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void QPoly::add_scaled(const QPoly& p, const mpz_class& scale, int shift) {
  if (p.is_zero() || scale == 0) return;
  const std::size_t need = p.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need);
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
    coeffs_[k + static_cast<std::size_t>(shift)] += scale * p.coeffs_[k];
  }
  trim();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  add_scaled(rhs, 1, 0);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  add_scaled(rhs, -1, 0);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

} // namespace gkmin
