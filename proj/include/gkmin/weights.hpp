#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gkmin/permutation.hpp"

namespace gkmin {

using Rational = mpq_class;

bool is_integer(const Rational& x);

/// Point lambda = (a, b) of Lambda = Lambda_1^n x Lambda_1^n. Within each of
/// a and b all pairwise differences are integers; this is checked on
/// construction. Nothing computed here depends on the common offset of a
/// block, only on differences.
class WeightVector {
public:
  WeightVector(std::vector<Rational> a, std::vector<Rational> b);

  /// From 2n integers a_1..a_n, b_1..b_n.
  static WeightVector from_integers(const std::vector<long>& values);

  int degree() const noexcept { return static_cast<int>(a_.size()); }
  const std::vector<Rational>& a() const noexcept { return a_; }
  const std::vector<Rational>& b() const noexcept { return b_; }

  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

/// Pairwise distinct entries in a and in b.
bool is_regular(const WeightVector& lambda);
/// a_s - a_t and b_s - b_t never a negative integer for s < t.
bool is_dominant(const WeightVector& lambda);

/// Coordinate action of S_n: (w v)_k = v_{w^{-1}(k)}.
std::vector<Rational> act(const Permutation& w, std::span<const Rational> v);

/// h_L(nu) = prod_{1 <= s < t <= n-1} (nu_s - nu_t) / (t - s). Only the first
/// n-1 coordinates enter; the empty product (n <= 2) is 1.
Rational h_L(std::span<const Rational> nu);

/// h_L(-y_i a) = (1 / (1! 2! ... (n-2)!)) prod_{s < t; s, t != i} (a_s - a_t),
/// the Weyl dimension of the GL_{n-1} representation with a_i deleted.
Rational weyl_dim(std::span<const Rational> a, int i);

/// Goldie rank polynomial p_{y_i} evaluated at -a, 2 <= i <= n, by the
/// alternating tail sum_{j >= i} (-1)^{j-i} weyl_dim(a, j).
///
/// Note the sign: the argument is the dominant a; the polynomial is
/// evaluated at the antidominant -a. Passing -a here does not raise an error
/// but breaks positivity.
Rational goldie_eval(int i, std::span<const Rational> a);

/// i with y == y_rep(i, n); throws DomainError if y is not on the y-chain.
int y_chain_index(const Permutation& y);

/// c_w(lambda) = p_{(w_0 w^{-1})_min}(-a) * p_{(w_0 w)_min}(-b) for
/// w = w_{i,j}, i != j, and lambda regular dominant. The minimal elements are
/// found by Robinson-Schensted. For w = v_{k,l} the value is
/// p_{y_k}(-a) p_{y_l}(-b).
Rational bernstein_c(const Permutation& w, const WeightVector& lambda);

/// dim F_{i,j} = weyl_dim(a, i) * weyl_dim(b, j); lambda regular dominant.
Rational dim_F(int i, int j, const WeightVector& lambda);

/// lambda_{i,j}: a_i moved to the last a-slot, b_j to the last b-slot.
WeightVector lambda_rearrange(const WeightVector& lambda, int i, int j);

/// a - w b = (a_1 - b_{w^{-1}(1)}, ..., a_n - b_{w^{-1}(n)}).
std::vector<Rational> extremal_weight(const WeightVector& lambda, const Permutation& w);

/// <a, b> - <a, w b>; positive for w != 1 when lambda is regular dominant.
Rational rearrangement_gap(const WeightVector& lambda, const Permutation& w);

/// Regular dominant lambda with strictly decreasing entries, random gaps in
/// 1..max_gap, and a random common rational offset in both blocks.
WeightVector random_regular_dominant(int n, std::mt19937_64& rng, int max_gap = 4);

} // namespace gkmin
