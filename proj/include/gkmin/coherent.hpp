#pragma once

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gkmin/int_matrix.hpp"
#include "gkmin/langlands.hpp"
#include "gkmin/weights.hpp"

namespace gkmin {

/// Label of a basis vector of Coh^min: Vbar(k, l) for the family attached
/// to v_{k,l} (2 <= k, l <= n), or Triv for the family of the trivial
/// representation. Ordered row-major with Triv last.
struct BasisLabel {
  bool triv = false;
  int k = 0;
  int l = 0;

  static BasisLabel vbar(int k, int l) { return {false, k, l}; }
  static BasisLabel trivial() { return {true, 0, 0}; }

  /// Position in the fixed order, 0 .. (n-1)^2.
  std::size_t index(int n) const;
  std::string to_string() const;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel& x, const BasisLabel& y) {
    return std::tuple(x.triv, x.k, x.l) <=> std::tuple(y.triv, y.k, y.l);
  }
};

/// All (n-1)^2 + 1 labels in order.
std::vector<BasisLabel> basis_labels(int n);

/// Finitely supported integer combination of basis labels. Zero
/// coefficients are never stored, so equality is coordinate equality.
class CoherentVector {
public:
  explicit CoherentVector(int n);

  int degree() const noexcept { return n_; }
  const std::map<BasisLabel, mpz_class>& coords() const noexcept { return coords_; }
  mpz_class coeff(const BasisLabel& label) const;
  /// Coefficients in label order, zeros included.
  std::vector<mpz_class> dense() const;

  void add(const BasisLabel& label, const mpz_class& c);
  CoherentVector& operator+=(const CoherentVector& rhs);
  CoherentVector& scale(const mpz_class& c);

  friend CoherentVector operator+(CoherentVector x, const CoherentVector& y) { return x += y; }
  friend bool operator==(const CoherentVector&, const CoherentVector&) = default;

private:
  void check(const BasisLabel& label) const;

  int n_;
  std::map<BasisLabel, mpz_class> coords_;
};

/// Psi_{i,j} = sum over (k, l) in [i] x [j] of Vbar(k, l), plus Triv if i == j.
CoherentVector psi_induced(int i, int j, int n);

/// Integer combination of the families Psi_{k,l} (2 <= k, l <= n) and the
/// trivial family.
struct InducedCombination {
  int n = 0;
  std::map<std::pair<int, int>, mpz_class> psi;
  mpz_class triv = 0;

  friend bool operator==(const InducedCombination&, const InducedCombination&) = default;
};

/// Vbar(i, j) = sum_{k >= i, l >= j} (-1)^{k-i+l-j} Psi_{k,l}
///              + (-1)^{i+j-1} (n - max(i, j) + 1) Triv,   2 <= i, j <= n.
InducedCombination psibar_in_psi(int i, int j, int n);

/// Substitutes psi_induced into an InducedCombination.
CoherentVector expand(const InducedCombination& combination);

/// Column c is psi_induced for the c-th label (Triv maps to itself).
IntMatrix transition_psi_to_psibar(int n);
/// Column c is psibar_in_psi for the c-th label, in the same ordering.
IntMatrix transition_psibar_to_psi(int n);

/// Psi_{1,j} = sum_{k >= 2} (-1)^k Psi_{k,j} + (-1)^{j-1} Triv and the
/// transposed family, for all j, after substitution.
bool psi_row_relations(int n);

/// The Psi_{i,j} with i, j >= 2 together with Triv have coordinate matrix
/// of determinant +-1.
bool basis_check(int n);

struct Constituent {
  /// "Xbar(v_k,l)" or "F".
  std::string name;
  int k = 0;  // 0 for F
  int l = 0;
  LanglandsParameter parameter;
  mpz_class multiplicity;
  GkClass gk_class;
};

/// Constituents of the induced module at w_{i,j}: one Xbar(gamma_{lambda,
/// v_{k,l}}) per (k, l) in [i] x [j], then F_lambda when i == j.
std::vector<Constituent> composition_series(int i, int j, const WeightVector& lambda);

/// sum over Vbar(k, l) of coefficient * c_{v_{k,l}}(lambda); Triv counts 0.
Rational degree_functional(const CoherentVector& vec, const WeightVector& lambda);

} // namespace gkmin
