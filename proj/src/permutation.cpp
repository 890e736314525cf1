#include "gkmin/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gkmin/error.hpp"

namespace gkmin {

namespace {

void check_degree(int n) {
  if (n < 1 || n > Permutation::kMaxDegree) {
    throw DomainError("permutation degree " + std::to_string(n) + " outside 1.." +
                      std::to_string(Permutation::kMaxDegree));
  }
}

void check_index(int i, int lo, int n, const char* what) {
  if (i < lo || i > n) {
    throw DomainError(std::string(what) + ": index " + std::to_string(i) + " outside " +
                      std::to_string(lo) + ".." + std::to_string(n));
  }
}

void check_same_degree(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) {
    throw DomainError("degree mismatch: " + std::to_string(u.degree()) + " vs " +
                      std::to_string(v.degree()));
  }
}

} // namespace

Permutation::Permutation(int n) {
  check_degree(n);
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  check_degree(n);
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw DomainError("not a permutation of 1.." + std::to_string(n) + ": " + to_string());
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

int Permutation::length() const noexcept {
  int inversions = 0;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    for (std::size_t t = s + 1; t < images_.size(); ++t) {
      if (images_[s] > images_[t]) ++inversions;
    }
  }
  return inversions;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(images_[k]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << '[' << w.to_string() << ']'; }

Permutation compose(const Permutation& u, const Permutation& v) {
  check_same_degree(u, v);
  std::vector<int> out(static_cast<std::size_t>(u.degree()));
  for (int k = 1; k <= u.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = u(v(k));
  return Permutation(std::move(out));
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  check_same_degree(u, v);
  const int n = u.degree();
  // Running counts over prefixes: ucount[q] = #{s <= p : u(s) >= q}.
  std::vector<int> ucount(static_cast<std::size_t>(n + 2), 0);
  std::vector<int> vcount(static_cast<std::size_t>(n + 2), 0);
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= u(p); ++q) ++ucount[static_cast<std::size_t>(q)];
    for (int q = 1; q <= v(p); ++q) ++vcount[static_cast<std::size_t>(q)];
    for (int q = 1; q <= n; ++q) {
      if (ucount[static_cast<std::size_t>(q)] > vcount[static_cast<std::size_t>(q)]) return false;
    }
  }
  return true;
}

Permutation longest_element(int n) {
  check_degree(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = n + 1 - k;
  return Permutation(std::move(images));
}

Permutation longest_parabolic(int n) {
  check_degree(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) images[static_cast<std::size_t>(k - 1)] = n - k;
  images.back() = n;
  return Permutation(std::move(images));
}

Permutation simple_reflection(int k, int n) {
  check_degree(n);
  check_index(k, 1, n - 1, "simple_reflection");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(k - 1)], images[static_cast<std::size_t>(k)]);
  return Permutation(std::move(images));
}

Permutation w_cycle(int i, int j, int n) {
  check_degree(n);
  check_index(i, 1, n, "w_cycle");
  check_index(j, 1, n, "w_cycle");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  const int step = i < j ? 1 : -1;
  // Cycle i -> i+step -> ... -> j -> i.
  for (int k = i; k != j; k += step) images[static_cast<std::size_t>(k - 1)] = k + step;
  images[static_cast<std::size_t>(j - 1)] = i;
  return Permutation(std::move(images));
}

Permutation v_cycle(int i, int j, int n) {
  check_degree(n);
  check_index(i, 2, n, "v_cycle");
  check_index(j, 2, n, "v_cycle");
  return i <= j ? w_cycle(i - 1, j, n) : w_cycle(i, j - 1, n);
}

Permutation x_rep(int i, int n) {
  check_degree(n);
  check_index(i, 1, n, "x_rep");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 1; k < i; ++k) images[static_cast<std::size_t>(k - 1)] = k;
  images[static_cast<std::size_t>(i - 1)] = n;
  for (int k = i + 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = k - 1;
  return Permutation(std::move(images));
}

Permutation y_rep(int i, int n) { return compose(longest_parabolic(n), x_rep(i, n)); }

std::set<int> bracket_set(int i, int n) {
  check_degree(n);
  check_index(i, 1, n, "bracket_set");
  std::set<int> out;
  for (int k : {i, i + 1}) {
    if (k >= 2 && k <= n) out.insert(k);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  if (n > 10) throw ResourceLimitError("refusing to enumerate S_" + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool is_w_cycle(const Permutation& w) {
  // w_{i,j} moves exactly the interval between i and j cyclically; recover
  // the candidate endpoints from the support and compare.
  const int n = w.degree();
  int lo = 0, hi = 0;
  for (int k = 1; k <= n; ++k) {
    if (w(k) != k) {
      if (!lo) lo = k;
      hi = k;
    }
  }
  if (!lo) return false;
  return w == w_cycle(lo, hi, n) || w == w_cycle(hi, lo, n);
}

} // namespace gkmin

std::size_t std::hash<gkmin::Permutation>::operator()(const gkmin::Permutation& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}
