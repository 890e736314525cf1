#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gkmin {

/// Element of the symmetric group S_n in one-line notation.
///
/// `(*this)(k)` is the image of k, with 1 <= k <= n. Products act on the
/// left: `compose(u, v)(k) == u(v(k))`. Every routine in the library states
/// permutation images in this convention.
class Permutation {
public:
  static constexpr int kMaxDegree = 64;

  /// The identity of S_n.
  explicit Permutation(int n);

  /// Validates that `images` is a bijection of {1, ..., n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Inversion count |{(s, t) : s < t, w(s) > w(t)}|.
  int length() const noexcept;

  /// One-line notation, comma separated: "2,3,1".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// u * v, i.e. k -> u(v(k)). Throws DomainError on degree mismatch.
Permutation compose(const Permutation& u, const Permutation& v);

/// Bruhat order by the rank-matrix criterion:
/// u <= v iff for all p, q: #{s <= p : u(s) >= q} <= #{s <= p : v(s) >= q}.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// w_0 = [n, n-1, ..., 1].
Permutation longest_element(int n);

/// w_L, the longest element of S_{n-1} inside S_n: [n-1, ..., 1, n].
Permutation longest_parabolic(int n);

/// Simple reflection s_k = (k k+1), 1 <= k < n.
Permutation simple_reflection(int k, int n);

/// The cycle (i i-1 ... j) if i > j, (i i+1 ... j) if i < j, identity if i == j.
Permutation w_cycle(int i, int j, int n);

/// v_{i,j} = w_{i-1,j} if i <= j, w_{i,j-1} if i > j; defined for 2 <= i, j <= n.
Permutation v_cycle(int i, int j, int n);

/// Minimal length representative x_i of S_{n-1} \ S_n: fixes 1..i-1,
/// sends i to n and k to k-1 for k > i. Ordered x_1 > x_2 > ... > x_n = 1.
Permutation x_rep(int i, int n);

/// Maximal length representative y_i = w_L x_i.
Permutation y_rep(int i, int n);

/// [i] = {i, i+1} intersected with {2, ..., n}.
std::set<int> bracket_set(int i, int n);

/// All n! elements in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// True iff w = w_{i,j} for some i != j.
bool is_w_cycle(const Permutation& w);

} // namespace gkmin

template <>
struct std::hash<gkmin::Permutation> {
  std::size_t operator()(const gkmin::Permutation& w) const noexcept;
};
