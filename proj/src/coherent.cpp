#include "gkmin/coherent.hpp"

#include <algorithm>

#include "gkmin/error.hpp"

namespace gkmin {

namespace {

void check_n(int n, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + " needs n >= 2");
}

void check_range(int v, int lo, int n, const char* what) {
  if (v < lo || v > n) {
    throw DomainError(std::string(what) + ": index " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                      std::to_string(n));
  }
}

mpz_class sign(int e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

std::size_t BasisLabel::index(int n) const {
  const auto m = static_cast<std::size_t>(n - 1);
  if (triv) return m * m;
  return static_cast<std::size_t>(k - 2) * m + static_cast<std::size_t>(l - 2);
}

std::string BasisLabel::to_string() const {
  return triv ? "Triv" : "Vbar(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

std::vector<BasisLabel> basis_labels(int n) {
  check_n(n, "basis_labels");
  std::vector<BasisLabel> out;
  for (int k = 2; k <= n; ++k) {
    for (int l = 2; l <= n; ++l) out.push_back(BasisLabel::vbar(k, l));
  }
  out.push_back(BasisLabel::trivial());
  return out;
}

CoherentVector::CoherentVector(int n) : n_(n) { check_n(n, "CoherentVector"); }

void CoherentVector::check(const BasisLabel& label) const {
  if (label.triv) return;
  if (label.k < 2 || label.k > n_ || label.l < 2 || label.l > n_) {
    throw DomainError("basis label " + label.to_string() + " invalid for n = " + std::to_string(n_));
  }
}

mpz_class CoherentVector::coeff(const BasisLabel& label) const {
  check(label);
  auto it = coords_.find(label);
  return it == coords_.end() ? mpz_class(0) : it->second;
}

std::vector<mpz_class> CoherentVector::dense() const {
  const auto m = static_cast<std::size_t>(n_ - 1);
  std::vector<mpz_class> out(m * m + 1);
  for (const auto& [label, c] : coords_) out[label.index(n_)] = c;
  return out;
}

void CoherentVector::add(const BasisLabel& label, const mpz_class& c) {
  check(label);
  if (c == 0) return;
  auto [it, inserted] = coords_.emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

CoherentVector& CoherentVector::operator+=(const CoherentVector& rhs) {
  if (rhs.n_ != n_) throw DomainError("coherent vectors of different degree");
  for (const auto& [label, c] : rhs.coords_) add(label, c);
  return *this;
}

CoherentVector& CoherentVector::scale(const mpz_class& c) {
  if (c == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& entry : coords_) entry.second *= c;
  return *this;
}

CoherentVector psi_induced(int i, int j, int n) {
  check_n(n, "psi_induced");
  check_range(i, 1, n, "psi_induced");
  check_range(j, 1, n, "psi_induced");
  CoherentVector v(n);
  for (int k : bracket_set(i, n)) {
    for (int l : bracket_set(j, n)) v.add(BasisLabel::vbar(k, l), 1);
  }
  if (i == j) v.add(BasisLabel::trivial(), 1);
  return v;
}

InducedCombination psibar_in_psi(int i, int j, int n) {
  check_n(n, "psibar_in_psi");
  check_range(i, 2, n, "psibar_in_psi");
  check_range(j, 2, n, "psibar_in_psi");
  InducedCombination out;
  out.n = n;
  for (int k = i; k <= n; ++k) {
    for (int l = j; l <= n; ++l) out.psi.emplace(std::pair(k, l), sign(k - i + l - j));
  }
  out.triv = sign(i + j - 1) * (n - std::max(i, j) + 1);
  return out;
}

CoherentVector expand(const InducedCombination& combination) {
  CoherentVector v(combination.n);
  for (const auto& [kl, c] : combination.psi) {
    v += psi_induced(kl.first, kl.second, combination.n).scale(c);
  }
  v.add(BasisLabel::trivial(), combination.triv);
  return v;
}

IntMatrix transition_psi_to_psibar(int n) {
  const auto labels = basis_labels(n);
  IntMatrix m(labels.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto& label = labels[c];
    if (label.triv) {
      m(c, c) = 1;
      continue;
    }
    const CoherentVector psi = psi_induced(label.k, label.l, n);
    for (const auto& [row, value] : psi.coords()) m(row.index(n), c) = value;
  }
  return m;
}

IntMatrix transition_psibar_to_psi(int n) {
  const auto labels = basis_labels(n);
  IntMatrix m(labels.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto& label = labels[c];
    if (label.triv) {
      m(c, c) = 1;
      continue;
    }
    const auto comb = psibar_in_psi(label.k, label.l, n);
    for (const auto& [kl, value] : comb.psi) m(BasisLabel::vbar(kl.first, kl.second).index(n), c) = value;
    m(BasisLabel::trivial().index(n), c) = comb.triv;
  }
  return m;
}

bool psi_row_relations(int n) {
  check_n(n, "psi_row_relations");
  for (int j = 1; j <= n; ++j) {
    CoherentVector rows(n), cols(n);
    for (int k = 2; k <= n; ++k) {
      rows += psi_induced(k, j, n).scale(sign(k));
      cols += psi_induced(j, k, n).scale(sign(k));
    }
    rows.add(BasisLabel::trivial(), sign(j - 1));
    cols.add(BasisLabel::trivial(), sign(j - 1));
    if (rows != psi_induced(1, j, n) || cols != psi_induced(j, 1, n)) return false;
  }
  return true;
}

bool basis_check(int n) {
  const mpz_class det = transition_psi_to_psibar(n).determinant();
  return det == 1 || det == -1;
}

std::vector<Constituent> composition_series(int i, int j, const WeightVector& lambda) {
  const int n = lambda.degree();
  check_n(n, "composition_series");
  check_range(i, 1, n, "composition_series");
  check_range(j, 1, n, "composition_series");
  if (!is_regular(lambda) || !is_dominant(lambda)) {
    throw DomainError("composition_series: weight " + lambda.to_string() + " is not regular dominant");
  }
  std::vector<Constituent> out;
  for (int k : bracket_set(i, n)) {
    for (int l : bracket_set(j, n)) {
      auto gamma = parameter_from(lambda, v_cycle(k, l, n));
      const GkClass cls = gk_dim_class(gamma);
      out.push_back({"Xbar(v_" + std::to_string(k) + "," + std::to_string(l) + ")", k, l, std::move(gamma), 1, cls});
    }
  }
  if (i == j) {
    auto gamma = parameter_from(lambda, Permutation::identity(n));
    const GkClass cls = gk_dim_class(gamma);
    out.push_back({"F", 0, 0, std::move(gamma), 1, cls});
  }
  return out;
}

Rational degree_functional(const CoherentVector& vec, const WeightVector& lambda) {
  const int n = vec.degree();
  if (lambda.degree() != n) throw DomainError("degree_functional: degree mismatch");
  if (!is_regular(lambda) || !is_dominant(lambda)) {
    throw DomainError("degree_functional: weight " + lambda.to_string() + " is not regular dominant");
  }
  Rational total = 0;
  for (const auto& [label, c] : vec.coords()) {
    if (label.triv) continue;
    total += Rational(c) * bernstein_c(v_cycle(label.k, label.l, n), lambda);
  }
  return total;
}

} // namespace gkmin
