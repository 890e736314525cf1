#include "gkmin/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gkmin/error.hpp"

namespace gkmin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw DomainError("not a partition: " + to_string());
    }
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const noexcept {
  if (other.rows() > rows()) return false;
  for (int i = 1; i <= other.rows(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition two_column_shape(int n) {
  if (n < 2) throw DomainError("two-column shape needs n >= 2");
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
  parts[0] = 2;
  return Partition(std::move(parts));
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  // Throws on non-partition shape (including empty rows).
  Partition shape_check(lengths);
  const int n = shape_check.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int x = rows_[r][c];
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
        throw DomainError("tableau entries must be exactly 1.." + std::to_string(n) + ": " + to_string());
      }
      seen[static_cast<std::size_t>(x)] = true;
      if (c > 0 && rows_[r][c - 1] >= x) throw DomainError("row not increasing: " + to_string());
      if (r > 0 && rows_[r - 1][c] >= x) throw DomainError("column not increasing: " + to_string());
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lengths));
}

int StandardTableau::size() const noexcept {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::vector<int> StandardTableau::column(int c) const {
  std::vector<int> out;
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) >= c) out.push_back(row[static_cast<std::size_t>(c - 1)]);
  }
  return out;
}

std::string StandardTableau::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
    out += ']';
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const StandardTableau& t) { return os << t.to_string(); }

TableauPair rs(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int k = 1; k <= w.degree(); ++k) {
    int x = w(k);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({k});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(k);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

Permutation rs_inverse(const StandardTableau& insertion, const StandardTableau& recording) {
  if (insertion.shape() != recording.shape()) {
    throw DomainError("rs_inverse: shape mismatch " + insertion.shape().to_string() + " vs " +
                      recording.shape().to_string());
  }
  const int n = insertion.size();
  if (n == 0) throw DomainError("rs_inverse: empty tableaux");
  auto p = insertion.rows();
  auto q = recording.rows();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    // Largest recording entry sits at a corner; remove the matching P box
    // and reverse-bump upward.
    std::size_t r = 0;
    while (q[r].back() != k) ++r;
    q[r].pop_back();
    int x = p[r].back();
    p[r].pop_back();
    if (p[r].empty()) {
      p.pop_back();
      q.pop_back();
    }
    while (r > 0) {
      --r;
      auto& row = p[r];
      // Largest entry smaller than x gets bumped up.
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(*it, x);
    }
    images[static_cast<std::size_t>(k - 1)] = x;
  }
  return Permutation(std::move(images));
}

bool left_cell_equiv(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DomainError("left_cell_equiv: degree mismatch");
  return rs(x).recording == rs(y).recording;
}

bool right_cell_equiv(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DomainError("right_cell_equiv: degree mismatch");
  return rs(x).insertion == rs(y).insertion;
}

std::vector<Permutation> two_column_cell(int n) {
  if (n < 2) throw DomainError("two_column_cell needs n >= 2");
  const Permutation w0 = longest_element(n);
  std::set<Permutation> cell;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) cell.insert(compose(w_cycle(i, j, n), w0));
    }
  }
  return {cell.begin(), cell.end()};
}

bool in_two_column_cell(const Permutation& w) {
  return w.degree() >= 2 && rs(w).insertion.shape() == two_column_shape(w.degree());
}

StandardTableau canonical_two_column_tableau(int n) {
  if (n < 2) throw DomainError("canonical two-column tableau needs n >= 2");
  std::vector<std::vector<int>> rows;
  rows.push_back({1, n});
  for (int k = 2; k < n; ++k) rows.push_back({k});
  return StandardTableau(std::move(rows));
}

Permutation minimal_element(const Permutation& w) {
  if (!in_two_column_cell(w)) {
    throw DomainError("minimal_element: " + w.to_string() + " is not in the two-column double cell");
  }
  return rs_inverse(canonical_two_column_tableau(w.degree()), rs(w).recording);
}

} // namespace gkmin
