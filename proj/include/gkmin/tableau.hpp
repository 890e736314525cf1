#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gkmin/permutation.hpp"

namespace gkmin {

/// Integer partition, parts weakly decreasing and positive. May be empty.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  /// Part i (1-based); 0 past the last row.
  int part(int i) const noexcept {
    return i >= 1 && i <= rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int size() const noexcept;
  bool contains(const Partition& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// [2, 1^{n-2}]: the shape with columns of lengths n-1 and 1 (for n = 2, [2]).
Partition two_column_shape(int n);

/// Standard Young tableau filled with 1..n, stored row-major.
class StandardTableau {
public:
  StandardTableau() = default;
  /// Validates row/column strictness and that entries are exactly 1..n.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const;
  int size() const noexcept;
  /// Entries of column c (1-based), top to bottom.
  std::vector<int> column(int c) const;

  /// JSON-style rendering: [[1,3],[2]].
  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

private:
  std::vector<std::vector<int>> rows_;
};

std::ostream& operator<<(std::ostream& os, const StandardTableau& t);

struct TableauPair {
  StandardTableau insertion; // P(w)
  StandardTableau recording; // Q(w)
};

/// Robinson-Schensted row insertion of the word w(1), ..., w(n).
TableauPair rs(const Permutation& w);

/// Inverse of rs. Throws DomainError if the shapes differ or P, Q are empty.
Permutation rs_inverse(const StandardTableau& insertion, const StandardTableau& recording);

/// x ~_L y iff Q(x) == Q(y).
bool left_cell_equiv(const Permutation& x, const Permutation& y);
/// x ~_R y iff P(x) == P(y).
bool right_cell_equiv(const Permutation& x, const Permutation& y);

/// The double cell {w_{i,j} w_0 : i != j}, as a sorted set without repeats.
/// Its size is (n-1)^2 because w_{i,i+1} == w_{i+1,i}.
std::vector<Permutation> two_column_cell(int n);

/// Whether w lies in the two-column double cell, i.e. RS shape [2, 1^{n-2}].
bool in_two_column_cell(const Permutation& w);

/// The insertion tableau whose columns read 1..n-1 and n.
StandardTableau canonical_two_column_tableau(int n);

/// The unique element of w's left cell whose insertion tableau is
/// canonical_two_column_tableau(n). Throws DomainError if w is outside the
/// two-column double cell.
Permutation minimal_element(const Permutation& w);

} // namespace gkmin
