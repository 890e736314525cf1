#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkmin/permutation.hpp"
#include "gkmin/weights.hpp"

namespace gkmin {

/// Character chi_{a,b} of C^x, z -> z^a conj(z)^b; requires a - b integral.
class Character {
public:
  Character(Rational a, Rational b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  friend bool operator==(const Character& x, const Character& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const Character& x, const Character& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

private:
  Rational a_;
  Rational b_;
};

/// Multiset of n characters. Stored sorted (a descending, then b
/// descending), so equality is multiset equality.
class LanglandsParameter {
public:
  explicit LanglandsParameter(std::vector<Character> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<Character>& entries() const noexcept { return entries_; }

  /// "a:b;a:b;..." in stored order.
  std::string to_string() const;

  friend bool operator==(const LanglandsParameter&, const LanglandsParameter&) = default;

private:
  std::vector<Character> entries_;
};

/// a > b in the sense a - b in {1, 2, 3, ...}.
bool succ(const Rational& a, const Rational& b);

bool is_totally_ordered(const std::vector<Character>& gamma);
bool is_totally_ordered(const LanglandsParameter& gamma);
bool is_integral(const LanglandsParameter& gamma);

enum class GkClass {
  Zero,     // finite dimensional
  Minimal,  // Gelfand-Kirillov dimension exactly 2n - 2
  Larger,   // strictly above 2n - 2, not refined further
};

std::string to_string(GkClass c);
/// 0 for Zero, 2n - 2 for Minimal, nothing for Larger.
std::optional<int> gk_dimension(GkClass c, int n);

/// Zero iff gamma is totally ordered; Minimal iff not, but some
/// (n-1)-submultiset is; Larger otherwise. Requires n >= 2.
GkClass gk_dim_class(const LanglandsParameter& gamma);

/// gamma_{lambda,w} = {(a_k, b_{w^{-1}(k)})}.
LanglandsParameter parameter_from(const WeightVector& lambda, const Permutation& w);

struct SingularPoint {
  int i0 = 0;
  int j0 = 0;
  WeightVector lambda;        // dominant, not regular
  LanglandsParameter gamma;   // diagonal (n-1)-chain plus (n/2 - i0, n/2 - j0)
};

/// (i0, j0) = (i, j-1) if i < j, (i-1, j) if i > j, and the weight and
/// parameter built around the offset n/2. Requires i != j in 1..n.
SingularPoint singular_point(int i, int j, int n);

} // namespace gkmin
