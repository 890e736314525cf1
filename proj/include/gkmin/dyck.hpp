#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkmin/int_matrix.hpp"
#include "gkmin/permutation.hpp"
#include "gkmin/qpoly.hpp"
#include "gkmin/tableau.hpp"

namespace gkmin {

/// Box (row, column), both 1-based. Its level is row + column.
using Box = std::pair<int, int>;
using BoxSet = std::set<Box>;

inline int level(const Box& b) { return b.first + b.second; }

/// outer \ inner, with inner contained in outer.
class SkewPartition {
public:
  SkewPartition() = default;
  /// Throws DomainError unless inner is contained in outer.
  SkewPartition(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  BoxSet boxes() const;
  int size() const noexcept { return outer_.size() - inner_.size(); }

  std::string to_string() const;

  friend bool operator==(const SkewPartition&, const SkewPartition&) = default;

private:
  Partition outer_;
  Partition inner_;
};

// Diagrams are drawn rotated counterclockwise by 3pi/4, so both row and
// column indices grow upward. The box directly above (i, j) is (i+1, j+1);
// horizontal position is proportional to i - j.

/// Rookwise connected components, each sorted.
std::vector<BoxSet> connected_components(const BoxSet& boxes);

/// Boxes of eta with no box of eta directly above them.
BoxSet outer_border_strip(const BoxSet& eta);
BoxSet outer_border_strip(const SkewPartition& eta);

/// Dyck connected border strip: no box lies strictly below the level of
/// either endpoint. Throws DomainError unless theta is a nonempty, rookwise
/// connected border strip.
bool is_dyck_cbs(const BoxSet& theta);

/// Recursive Dyck predicate; the empty shape is Dyck.
bool is_dyck(const BoxSet& eta);
bool is_dyck(const SkewPartition& eta);

/// dp(empty) = 0, dp(eta) = c(theta) + dp(eta \ theta).
int depth(const BoxSet& eta);
int depth(const SkewPartition& eta);

/// Psi(x) = [1^{i_x}], i_x = #{r < n : x^{-1}(r) > r}, for x a minimal
/// coset representative of S_{n-1} \ S_n. Throws DomainError otherwise.
Partition psi_map(const Permutation& x);

/// Whether x is one of x_1, ..., x_n.
bool is_minimal_coset_rep(const Permutation& x);

/// Brenti's closed form for the parabolic KL polynomial of type q:
/// q^{(|eta| - dp(eta))/2} if eta_{u,v} = Psi(v) \ Psi(u) is Dyck, else 0;
/// zero unless u <= v.
QPoly parabolic_kl_q(const Permutation& u, const Permutation& v);

/// Type -1: P^{L,-1}_{u,v} = P_{w_L u, w_L v}, via the ordinary KL oracle.
QPoly parabolic_kl_minus(const Permutation& u, const Permutation& v);

/// (P^{L,q}_{x_j,x_i}(1))_{i,j = 1..n}.
IntMatrix jordan_matrix(int n);

/// Deodhar's inversion formula over the x-chain, checked as a polynomial
/// identity, together with x_i^* = x_{n+1-i} where x^* = w_L x w_0.
bool deodhar_inversion_check(int n);

} // namespace gkmin
