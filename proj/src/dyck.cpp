#include "gkmin/dyck.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <stdexcept>

#include "gkmin/error.hpp"
#include "gkmin/kl.hpp"

namespace gkmin {

SkewPartition::SkewPartition(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw DomainError("skew partition: " + inner_.to_string() + " not contained in " + outer_.to_string());
  }
}

BoxSet SkewPartition::boxes() const {
  BoxSet out;
  for (int i = 1; i <= outer_.rows(); ++i) {
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.emplace(i, j);
  }
  return out;
}

std::string SkewPartition::to_string() const { return outer_.to_string() + "\\" + inner_.to_string(); }

std::vector<BoxSet> connected_components(const BoxSet& boxes) {
  std::vector<BoxSet> out;
  BoxSet seen;
  for (const Box& start : boxes) {
    if (seen.contains(start)) continue;
    BoxSet component;
    std::deque<Box> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      const Box b = queue.front();
      queue.pop_front();
      component.insert(b);
      for (const Box& nb : {Box{b.first + 1, b.second}, Box{b.first - 1, b.second}, Box{b.first, b.second + 1},
                            Box{b.first, b.second - 1}}) {
        if (boxes.contains(nb) && !seen.contains(nb)) {
          seen.insert(nb);
          queue.push_back(nb);
        }
      }
    }
    out.push_back(std::move(component));
  }
  return out;
}

BoxSet outer_border_strip(const BoxSet& eta) {
  BoxSet strip;
  for (const Box& b : eta) {
    if (!eta.contains({b.first + 1, b.second + 1})) strip.insert(b);
  }
  return strip;
}

BoxSet outer_border_strip(const SkewPartition& eta) { return outer_border_strip(eta.boxes()); }

namespace {

BoxSet difference(const BoxSet& a, const BoxSet& b) {
  BoxSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

} // namespace

bool is_dyck_cbs(const BoxSet& theta) {
  if (theta.empty()) throw DomainError("is_dyck_cbs: empty strip");
  if (connected_components(theta).size() != 1) throw DomainError("is_dyck_cbs: strip is not rookwise connected");
  std::set<int> contents;
  for (const Box& b : theta) {
    if (!contents.insert(b.first - b.second).second) throw DomainError("is_dyck_cbs: not a border strip");
  }
  // Endpoints are the extreme boxes along the horizontal axis i - j.
  auto by_content = [](const Box& x, const Box& y) { return x.first - x.second < y.first - y.second; };
  const auto [left, right] = std::minmax_element(theta.begin(), theta.end(), by_content);
  const int floor = std::max(level(*left), level(*right));
  return std::all_of(theta.begin(), theta.end(), [&](const Box& b) { return level(b) >= floor; });
}

bool is_dyck(const BoxSet& eta) {
  for (const BoxSet& component : connected_components(eta)) {
    const BoxSet theta = outer_border_strip(component);
    if (connected_components(theta).size() != 1) return false;
    if (!is_dyck_cbs(theta)) return false;
    if (!is_dyck(difference(component, theta))) return false;
  }
  return true;
}

bool is_dyck(const SkewPartition& eta) { return is_dyck(eta.boxes()); }

int depth(const BoxSet& eta) {
  int dp = 0;
  BoxSet rest = eta;
  while (!rest.empty()) {
    const BoxSet theta = outer_border_strip(rest);
    dp += static_cast<int>(connected_components(theta).size());
    rest = difference(rest, theta);
  }
  return dp;
}

int depth(const SkewPartition& eta) { return depth(eta.boxes()); }

bool is_minimal_coset_rep(const Permutation& x) {
  const Permutation inv = x.inverse();
  for (int r = 1; r + 1 < x.degree(); ++r) {
    if (inv(r) > inv(r + 1)) return false;
  }
  return true;
}

Partition psi_map(const Permutation& x) {
  if (!is_minimal_coset_rep(x)) {
    throw DomainError("psi_map: " + x.to_string() + " is not a minimal coset representative");
  }
  const Permutation inv = x.inverse();
  int count = 0;
  for (int r = 1; r < x.degree(); ++r) count += inv(r) > r ? 1 : 0;
  return Partition(std::vector<int>(static_cast<std::size_t>(count), 1));
}

namespace {

void check_chain_pair(const Permutation& u, const Permutation& v, const char* what) {
  if (u.degree() != v.degree()) throw DomainError(std::string(what) + ": degree mismatch");
  for (const Permutation* x : {&u, &v}) {
    if (!is_minimal_coset_rep(*x)) {
      throw DomainError(std::string(what) + ": " + x->to_string() + " is not a minimal coset representative");
    }
  }
}

} // namespace

QPoly parabolic_kl_q(const Permutation& u, const Permutation& v) {
  check_chain_pair(u, v, "parabolic_kl_q");
  if (!bruhat_leq(u, v)) return {};
  const SkewPartition eta(psi_map(v), psi_map(u));
  if (!is_dyck(eta)) return {};
  const int excess = eta.size() - depth(eta);
  if (excess % 2 != 0) {
    throw std::logic_error("parabolic_kl_q: Dyck shape " + eta.to_string() + " has odd |eta| - dp(eta)");
  }
  return QPoly::monomial(1, excess / 2);
}

QPoly parabolic_kl_minus(const Permutation& u, const Permutation& v) {
  check_chain_pair(u, v, "parabolic_kl_minus");
  const Permutation wl = longest_parabolic(u.degree());
  return kl_polynomial(compose(wl, u), compose(wl, v));
}

IntMatrix jordan_matrix(int n) {
  if (n < 2) throw DomainError("jordan_matrix needs n >= 2");
  std::vector<Permutation> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(x_rep(i, n));
  const auto size = static_cast<std::size_t>(n);
  IntMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) m(i, j) = parabolic_kl_q(xs[j], xs[i]).eval(1);
  }
  return m;
}

bool deodhar_inversion_check(int n) {
  if (n < 2) throw DomainError("deodhar_inversion_check needs n >= 2");
  const Permutation wl = longest_parabolic(n);
  const Permutation w0 = longest_element(n);
  auto star = [&](const Permutation& x) { return compose(compose(wl, x), w0); };

  std::vector<Permutation> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(x_rep(i, n));
  for (int i = 1; i <= n; ++i) {
    if (star(xs[static_cast<std::size_t>(i - 1)]) != xs[static_cast<std::size_t>(n - i)]) return false;
  }

  for (const Permutation& u : xs) {
    for (const Permutation& v : xs) {
      QPoly sum;
      for (const Permutation& x : xs) {
        if (!bruhat_leq(u, x) || !bruhat_leq(x, v)) continue;
        QPoly term = parabolic_kl_minus(u, x) * parabolic_kl_q(star(v), star(x));
        sum.add_scaled(term, (u.length() + x.length()) % 2 == 0 ? 1 : -1, 0);
      }
      if (sum != (u == v ? QPoly{1} : QPoly{})) return false;
    }
  }
  return true;
}

} // namespace gkmin
