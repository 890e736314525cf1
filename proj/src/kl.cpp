#include "gkmin/kl.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "gkmin/error.hpp"

namespace gkmin {

namespace {

std::uint64_t pack(const Permutation& w) {
  std::uint64_t code = 0;
  for (int x : w.images()) code = (code << 4) | static_cast<std::uint64_t>(x);
  return code;
}

} // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* env = std::getenv("GKMIN_ORACLE_MAX_N")) {
    try {
      limits.max_degree = std::stoi(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("GKMIN_ORACLE_MAX_N is not an integer: ") + env);
    }
  }
  return limits;
}

KlOracle::KlOracle(int n, OracleLimits limits) : n_(n), limits_(limits) {
  if (n < 1) throw DomainError("KL oracle needs n >= 1");
  if (n > limits_.max_degree) {
    throw ResourceLimitError("KL oracle degree " + std::to_string(n) + " exceeds the configured bound " +
                             std::to_string(limits_.max_degree));
  }
  if (n > 12) throw ResourceLimitError("KL oracle cannot enumerate S_" + std::to_string(n));

  elements_ = all_permutations(n);
  count_ = elements_.size();
  length_.resize(count_);
  index_.reserve(count_);
  for (std::size_t w = 0; w < count_; ++w) {
    index_.emplace(pack(elements_[w]), static_cast<int>(w));
    length_[w] = elements_[w].length();
  }

  lmul_.resize(static_cast<std::size_t>(n > 1 ? n - 1 : 0) * count_);
  pivot_.assign(count_, -1);
  for (int k = 0; k + 1 < n; ++k) {
    for (std::size_t w = 0; w < count_; ++w) {
      std::vector<int> images(elements_[w].images().begin(), elements_[w].images().end());
      // Left multiplication by s_{k+1} swaps the values k+1 and k+2.
      for (int& x : images) {
        if (x == k + 1) x = k + 2;
        else if (x == k + 2) x = k + 1;
      }
      const int sw = index_of(Permutation(std::move(images)));
      lmul_[static_cast<std::size_t>(k) * count_ + w] = sw;
      if (pivot_[w] < 0 && length_[static_cast<std::size_t>(sw)] < length_[w]) pivot_[w] = k;
    }
  }

  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  ranks_.assign(count_ * nn, 0);
  for (std::size_t w = 0; w < count_; ++w) {
    std::uint8_t* r = &ranks_[w * nn];
    std::vector<std::uint8_t> running(static_cast<std::size_t>(n), 0);
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= elements_[w](p); ++q) ++running[static_cast<std::size_t>(q - 1)];
      for (int q = 0; q < n; ++q) r[static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(q)] = running[static_cast<std::size_t>(q)];
    }
  }

  columns_.resize(count_);
}

int KlOracle::index_of(const Permutation& w) const {
  if (w.degree() != n_) {
    throw DomainError("degree mismatch: oracle for S_" + std::to_string(n_) + ", got " + w.to_string());
  }
  return index_.at(pack(w));
}

bool KlOracle::leq(int x, int w) const {
  const auto nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  const std::uint8_t* rx = &ranks_[static_cast<std::size_t>(x) * nn];
  const std::uint8_t* rw = &ranks_[static_cast<std::size_t>(w) * nn];
  for (std::size_t k = 0; k < nn; ++k) {
    if (rx[k] > rw[k]) return false;
  }
  return true;
}

std::shared_ptr<const KlOracle::Column> KlOracle::column(int w) {
  {
    std::shared_lock lock(column_mutex_);
    if (auto c = columns_[static_cast<std::size_t>(w)]) return c;
  }
  auto computed = compute_column(w);
  std::unique_lock lock(column_mutex_);
  auto& slot = columns_[static_cast<std::size_t>(w)];
  if (!slot) {
    std::size_t stored = 0;
    for (const auto& p : computed->p) stored += p.is_zero() ? 0 : 1;
    entries_ += stored;
    slot = std::move(computed);
  }
  return slot;
}

std::shared_ptr<const KlOracle::Column> KlOracle::compute_column(int w) {
  const auto wi = static_cast<std::size_t>(w);
  std::size_t below = 0;
  for (std::size_t x = 0; x < count_; ++x) below += leq(static_cast<int>(x), w) ? 1 : 0;
  if (entries_.load() + below > limits_.max_entries) {
    throw ResourceLimitError("KL memo limit of " + std::to_string(limits_.max_entries) +
                             " entries exceeded in S_" + std::to_string(n_));
  }

  auto col = std::make_shared<Column>();
  col->p.resize(count_);
  const int s = pivot_[wi];
  if (s < 0) {
    col->p[wi] = QPoly{1};
    return col;
  }

  const int v = lmul(s, w);
  const auto col_v = column(v);
  // Correction terms: z < sw with sz < z and mu(z, sw) != 0.
  struct Correction {
    int z;
    mpz_class mu;
    int shift;
    std::shared_ptr<const Column> col;
  };
  std::vector<Correction> corrections;
  for (const auto& [z, mu] : col_v->mu) {
    if (length_[static_cast<std::size_t>(lmul(s, z))] < length_[static_cast<std::size_t>(z)]) {
      corrections.push_back({z, mu, (length_[wi] - length_[static_cast<std::size_t>(z)]) / 2, column(z)});
    }
  }

  for (std::size_t xi = 0; xi < count_; ++xi) {
    const int x = static_cast<int>(xi);
    if (!leq(x, w)) continue;
    const int sx = lmul(s, x);
    const bool c = length_[static_cast<std::size_t>(sx)] < length_[xi];
    QPoly p;
    p.add_scaled(col_v->p[static_cast<std::size_t>(sx)], 1, c ? 0 : 1);
    p.add_scaled(col_v->p[xi], 1, c ? 1 : 0);
    for (const auto& corr : corrections) {
      p.add_scaled(corr.col->p[xi], -corr.mu, corr.shift);
    }
    col->p[xi] = std::move(p);
  }

  for (std::size_t zi = 0; zi < count_; ++zi) {
    const int gap = length_[wi] - length_[zi];
    if (gap <= 0 || gap % 2 == 0) continue;
    const mpz_class mu = col->p[zi].coeff((gap - 1) / 2);
    if (mu != 0) col->mu.emplace_back(static_cast<int>(zi), mu);
  }
  return col;
}

QPoly KlOracle::r_index(int u, int v) {
  if (!leq(u, v)) return {};
  if (u == v) return QPoly{1};
  const std::uint64_t key = static_cast<std::uint64_t>(u) * count_ + static_cast<std::uint64_t>(v);
  {
    std::shared_lock lock(r_mutex_);
    if (auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;
  }
  const int s = pivot_[static_cast<std::size_t>(v)];
  const int su = lmul(s, u);
  const int sv = lmul(s, v);
  QPoly r;
  if (length_[static_cast<std::size_t>(su)] < length_[static_cast<std::size_t>(u)]) {
    r = r_index(su, sv);
  } else {
    r = QPoly{-1, 1} * r_index(u, sv);
    r.add_scaled(r_index(su, sv), 1, 1);
  }
  std::unique_lock lock(r_mutex_);
  if (r_memo_.size() >= limits_.max_entries) {
    throw ResourceLimitError("R-polynomial memo limit of " + std::to_string(limits_.max_entries) + " exceeded");
  }
  r_memo_.emplace(key, r);
  return r;
}

QPoly KlOracle::r_polynomial(const Permutation& u, const Permutation& v) {
  return r_index(index_of(u), index_of(v));
}

QPoly KlOracle::kl_polynomial(const Permutation& u, const Permutation& v) {
  const int ui = index_of(u);
  const int vi = index_of(v);
  if (!leq(ui, vi)) return {};
  return column(vi)->p[static_cast<std::size_t>(ui)];
}

mpz_class KlOracle::verma_multiplicity(const Permutation& y, const Permutation& x) {
  const mpz_class value = kl_polynomial(x, y).eval(1);
  return (x.length() + y.length()) % 2 == 0 ? value : mpz_class(-value);
}

IntMatrix KlOracle::cell_kl_matrix() {
  if (n_ < 2) throw DomainError("cell_kl_matrix needs n >= 2");
  const auto n = static_cast<std::size_t>(n_);
  std::vector<Permutation> ys;
  for (int i = 1; i <= n_; ++i) ys.push_back(y_rep(i, n_));
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = verma_multiplicity(ys[i], ys[j]);
  }
  return m;
}

namespace {

struct SharedOracles {
  std::mutex mutex;
  std::optional<OracleLimits> limits;
  std::map<int, std::unique_ptr<KlOracle>> oracles;
};

SharedOracles& shared() {
  static SharedOracles instance;
  return instance;
}

} // namespace

void set_oracle_limits(const OracleLimits& limits) {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  s.limits = limits;
  s.oracles.clear();
}

OracleLimits oracle_limits() {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  if (!s.limits) s.limits = OracleLimits::from_environment();
  return *s.limits;
}

KlOracle& shared_oracle(int n) {
  auto& s = shared();
  std::lock_guard lock(s.mutex);
  if (!s.limits) s.limits = OracleLimits::from_environment();
  auto& slot = s.oracles[n];
  if (!slot) slot = std::make_unique<KlOracle>(n, *s.limits);
  return *slot;
}

QPoly r_polynomial(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw DomainError("r_polynomial: degree mismatch");
  return shared_oracle(u.degree()).r_polynomial(u, v);
}

QPoly kl_polynomial(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw DomainError("kl_polynomial: degree mismatch");
  return shared_oracle(u.degree()).kl_polynomial(u, v);
}

mpz_class verma_multiplicity(const Permutation& y, const Permutation& x) {
  if (y.degree() != x.degree()) throw DomainError("verma_multiplicity: degree mismatch");
  return shared_oracle(y.degree()).verma_multiplicity(y, x);
}

IntMatrix cell_kl_matrix(int n) { return shared_oracle(n).cell_kl_matrix(); }

} // namespace gkmin
