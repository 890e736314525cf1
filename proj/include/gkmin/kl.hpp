#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "gkmin/int_matrix.hpp"
#include "gkmin/permutation.hpp"
#include "gkmin/qpoly.hpp"

namespace gkmin {

/// Bounds on the Kazhdan-Lusztig oracle. Exceeding either one raises
/// ResourceLimitError; nothing is ever truncated silently.
struct OracleLimits {
  static constexpr int kDefaultMaxDegree = 6;
  static constexpr std::size_t kDefaultMaxEntries = 4'000'000;

  int max_degree = kDefaultMaxDegree;
  /// Cap on memoized (x, w) pairs with x <= w.
  std::size_t max_entries = kDefaultMaxEntries;

  /// Defaults, with max_degree overridden by GKMIN_ORACLE_MAX_N when set.
  static OracleLimits from_environment();
};

/// R-polynomials and Kazhdan-Lusztig polynomials of S_n by the standard
/// recursions, memoized.
///
/// KL polynomials are computed a column at a time: column w holds P_{x,w}
/// for every x, plus the list of mu(z, w) != 0. The recursion always pivots
/// on the smallest simple reflection s with s*w < w:
///
///   P_{x,w} = q^{1-c} P_{sx,sw} + q^c P_{x,sw}
///             - sum_{z < sw, sz < z} mu(z, sw) q^{(l(w)-l(z))/2} P_{x,z},
///
/// with c = 1 if sx < x and 0 otherwise.
///
/// Lookups take a shared lock; inserts take an exclusive one. Two threads
/// may compute the same column concurrently, and the first insert wins
/// (both values are equal).
class KlOracle {
public:
  explicit KlOracle(int n, OracleLimits limits = {});

  int degree() const noexcept { return n_; }
  const OracleLimits& limits() const noexcept { return limits_; }

  /// R_{u,v}; zero unless u <= v.
  QPoly r_polynomial(const Permutation& u, const Permutation& v);

  /// P_{u,v}; zero unless u <= v.
  QPoly kl_polynomial(const Permutation& u, const Permutation& v);

  /// (L_y : M_x) = (-1)^{l(x)+l(y)} P_{x,y}(1).
  mpz_class verma_multiplicity(const Permutation& y, const Permutation& x);

  /// ((-1)^{l(y_j)+l(y_i)} P_{y_j,y_i}(1))_{i,j = 1..n}, upper triangular.
  IntMatrix cell_kl_matrix();

  std::size_t memo_entries() const noexcept { return entries_.load(); }

private:
  struct Column {
    std::vector<QPoly> p;                         // indexed by x
    std::vector<std::pair<int, mpz_class>> mu;    // (z, mu(z, w)) with mu != 0
  };

  int index_of(const Permutation& w) const;
  bool leq(int x, int w) const;
  int lmul(int k, int w) const { return lmul_[static_cast<std::size_t>(k) * count_ + static_cast<std::size_t>(w)]; }
  std::shared_ptr<const Column> column(int w);
  std::shared_ptr<const Column> compute_column(int w);
  QPoly r_index(int u, int v);

  int n_;
  OracleLimits limits_;
  std::size_t count_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> length_;
  std::vector<int> lmul_;      // lmul_[k * count + w] = index of s_{k+1} w
  std::vector<int> pivot_;     // smallest 0-based k with s_{k+1} w < w, -1 at identity
  std::vector<std::uint8_t> ranks_;  // per element: n*n prefix counts

  mutable std::shared_mutex column_mutex_;
  std::vector<std::shared_ptr<const Column>> columns_;
  mutable std::shared_mutex r_mutex_;
  std::unordered_map<std::uint64_t, QPoly> r_memo_;
  std::atomic<std::size_t> entries_{0};
};

/// Limits for the process-wide oracles. Until set, these are
/// OracleLimits::from_environment(). Setting them drops cached oracles, so
/// call it before handing out references.
void set_oracle_limits(const OracleLimits& limits);
OracleLimits oracle_limits();

/// Process-wide oracle for degree n, created on first use.
KlOracle& shared_oracle(int n);

QPoly r_polynomial(const Permutation& u, const Permutation& v);
QPoly kl_polynomial(const Permutation& u, const Permutation& v);
mpz_class verma_multiplicity(const Permutation& y, const Permutation& x);
IntMatrix cell_kl_matrix(int n);

} // namespace gkmin
