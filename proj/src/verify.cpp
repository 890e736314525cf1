#include "gkmin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "gkmin/coherent.hpp"
#include "gkmin/dyck.hpp"
#include "gkmin/error.hpp"
#include "gkmin/kl.hpp"
#include "gkmin/langlands.hpp"
#include "gkmin/tableau.hpp"
#include "gkmin/weights.hpp"

namespace gkmin {

namespace {

using Witness = std::optional<Json>;
constexpr Witness kPass = std::nullopt;

struct Context {
  int n;
  std::uint64_t seed;
};

struct CheckDef {
  const char* suite;
  const char* id;
  bool needs_kl;
  int max_n;  // beyond this the check is skipped (exhaustive enumeration)
  std::function<Witness(const Context&)> run;
};

constexpr int kAnyN = Permutation::kMaxDegree;

std::mt19937_64 stream(const Context& ctx, const char* id) {
  std::uint64_t h = ctx.seed ^ 0x9e3779b97f4a7c15ULL;
  for (const char* p = id; *p; ++p) h = (h ^ static_cast<unsigned char>(*p)) * 0x100000001b3ULL;
  return std::mt19937_64(h ^ static_cast<std::uint64_t>(ctx.n));
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

Json pair_witness(const char* ka, const Permutation& a, const char* kb, const Permutation& b) {
  Json w;
  w[ka] = to_json(a);
  w[kb] = to_json(b);
  return w;
}

Json matrix_witness(const IntMatrix& got, const IntMatrix& want) {
  Json w;
  w["got"] = to_json(got);
  w["expected"] = to_json(want);
  return w;
}

IntMatrix bidiagonal_ones(int n) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) m(i, i + 1) = 1;
  return m;
}

// ---------------------------------------------------------------- symgroup

Witness sym_length_inverse(const Context& ctx) {
  const Permutation e(ctx.n);
  for (const auto& w : all_permutations(ctx.n)) {
    const Permutation inv = w.inverse();
    if (w.length() != inv.length() || compose(w, inv) != e) return Json{{"w", to_json(w)}};
  }
  return kPass;
}

Witness sym_bruhat_bounds(const Context& ctx) {
  const Permutation e(ctx.n);
  const Permutation w0 = longest_element(ctx.n);
  for (const auto& w : all_permutations(ctx.n)) {
    if (!bruhat_leq(e, w) || !bruhat_leq(w, w0)) return Json{{"w", to_json(w)}};
  }
  return kPass;
}

// Bruhat order as the transitive closure of w -> w t with l(w t) < l(w).
Witness sym_bruhat_closure(const Context& ctx) {
  const auto elems = all_permutations(ctx.n);
  std::map<Permutation, std::size_t> index;
  for (std::size_t k = 0; k < elems.size(); ++k) index.emplace(elems[k], k);
  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return elems[x].length() < elems[y].length(); });
  std::vector<std::vector<bool>> below(elems.size(), std::vector<bool>(elems.size(), false));
  for (std::size_t v : order) {
    below[v][v] = true;
    for (int s = 1; s <= ctx.n; ++s) {
      for (int t = s + 1; t <= ctx.n; ++t) {
        std::vector<int> img(elems[v].images().begin(), elems[v].images().end());
        std::swap(img[static_cast<std::size_t>(s - 1)], img[static_cast<std::size_t>(t - 1)]);
        const std::size_t u = index.at(Permutation(img));
        if (elems[u].length() >= elems[v].length()) continue;
        for (std::size_t z = 0; z < elems.size(); ++z) {
          if (below[u][z]) below[v][z] = true;
        }
      }
    }
  }
  for (std::size_t u = 0; u < elems.size(); ++u) {
    for (std::size_t v = 0; v < elems.size(); ++v) {
      if (below[v][u] != bruhat_leq(elems[u], elems[v])) return pair_witness("u", elems[u], "v", elems[v]);
    }
  }
  return kPass;
}

Witness sym_bruhat_symmetries(const Context& ctx) {
  auto rng = stream(ctx, "sym.bruhat_symmetries");
  const Permutation w0 = longest_element(ctx.n);
  for (int trial = 0; trial < 500; ++trial) {
    const Permutation u = random_permutation(ctx.n, rng);
    Permutation v = random_permutation(ctx.n, rng);
    if (trial % 2 == 0) {
      // Random pairs are rarely comparable; u times a transposition always is.
      std::uniform_int_distribution<int> pick(1, ctx.n);
      const int s = pick(rng), t = pick(rng);
      std::vector<int> img(u.images().begin(), u.images().end());
      std::swap(img[static_cast<std::size_t>(s - 1)], img[static_cast<std::size_t>(t - 1)]);
      v = Permutation(std::move(img));
    }
    const bool leq = bruhat_leq(u, v);
    if (leq != bruhat_leq(compose(w0, v), compose(w0, u)) || leq != bruhat_leq(u.inverse(), v.inverse()) ||
        (leq && u.length() > v.length())) {
      return pair_witness("u", u, "v", v);
    }
  }
  return kPass;
}

Witness sym_named_elements(const Context& ctx) {
  const int n = ctx.n;
  const Permutation wl = longest_parabolic(n);
  const Permutation w0 = longest_element(n);
  if (x_rep(1, n) != compose(wl, w0)) return Json{{"x_1", to_json(x_rep(1, n))}};
  for (int i = 1; i <= n; ++i) {
    const Permutation x = x_rep(i, n);
    const Permutation y = y_rep(i, n);
    if (x.length() != n - i || y != compose(wl, x) || y.length() != wl.length() + n - i) {
      return Json{{"i", i}, {"x", to_json(x)}, {"y", to_json(y)}};
    }
    if (i < n && !bruhat_leq(x_rep(i + 1, n), x)) return Json{{"i", i}};
    if (i < n && w_cycle(i, i + 1, n) != w_cycle(i + 1, i, n)) return Json{{"i", i}};
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = 2; j <= n; ++j) {
      const Permutation expected = i <= j ? w_cycle(i - 1, j, n) : w_cycle(i, j - 1, n);
      if (v_cycle(i, j, n) != expected || !is_w_cycle(expected)) return Json{{"i", i}, {"j", j}};
    }
  }
  return kPass;
}

// ---------------------------------------------------------------- tableaux

Witness tab_rs_roundtrip(const Context& ctx) {
  auto check = [](const Permutation& w) -> Witness {
    const auto pq = rs(w);
    const auto inv = rs(w.inverse());
    if (rs_inverse(pq.insertion, pq.recording) != w || inv.insertion != pq.recording ||
        inv.recording != pq.insertion) {
      return Json{{"w", to_json(w)}};
    }
    return kPass;
  };
  if (ctx.n <= 8) {
    for (const auto& w : all_permutations(ctx.n)) {
      if (auto bad = check(w)) return bad;
    }
    return kPass;
  }
  auto rng = stream(ctx, "tab.rs_roundtrip");
  for (int trial = 0; trial < 500; ++trial) {
    if (auto bad = check(random_permutation(ctx.n, rng))) return bad;
  }
  return kPass;
}

Witness tab_cell_enumeration(const Context& ctx) {
  const Partition shape = two_column_shape(ctx.n);
  std::vector<Permutation> found;
  for (const auto& w : all_permutations(ctx.n)) {
    if (rs(w).insertion.shape() == shape) found.push_back(w);
  }
  const auto cell = two_column_cell(ctx.n);
  const auto expected = static_cast<std::size_t>((ctx.n - 1) * (ctx.n - 1));
  if (found != cell || cell.size() != expected) {
    return Json{{"enumerated", found.size()}, {"cell", cell.size()}, {"expected", expected}};
  }
  return kPass;
}

Witness tab_minimal_elements(const Context& ctx) {
  const int n = ctx.n;
  const Permutation w0 = longest_element(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Permutation got = minimal_element(compose(w0, w_cycle(i, j, n)));
      const Permutation want = y_rep(i < j ? j : j + 1, n);
      if (got != want) return Json{{"i", i}, {"j", j}, {"got", to_json(got)}, {"expected", to_json(want)}};
    }
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = 2; j <= n; ++j) {
      if (minimal_element(compose(w0, v_cycle(i, j, n))) != y_rep(j, n)) return Json{{"v", {i, j}}};
    }
  }
  return kPass;
}

Witness tab_cmin(const Context& ctx) {
  const int n = ctx.n;
  const StandardTableau canonical = canonical_two_column_tableau(n);
  std::set<Permutation> minimal;
  for (const auto& w : two_column_cell(n)) {
    const Permutation m = minimal_element(w);
    if (!left_cell_equiv(m, w) || rs(m).insertion != canonical) return Json{{"w", to_json(w)}};
    minimal.insert(m);
  }
  std::set<Permutation> expected;
  for (int i = 2; i <= n; ++i) expected.insert(y_rep(i, n));
  if (minimal != expected) {
    Json got = Json::array();
    for (const auto& m : minimal) got.push_back(to_json(m));
    return Json{{"minimal", got}};
  }
  return kPass;
}

// ---------------------------------------------------------------- kl

Witness kl_normalization(const Context& ctx) {
  auto& oracle = shared_oracle(ctx.n);
  const auto elems = all_permutations(ctx.n);
  for (const auto& v : elems) {
    for (const auto& u : elems) {
      const QPoly p = oracle.kl_polynomial(u, v);
      const bool leq = bruhat_leq(u, v);
      bool ok = leq ? p.coeff(0) == 1 : p.is_zero();
      if (u == v) ok = ok && p == QPoly{1};
      if (leq && u != v) ok = ok && 2 * p.degree() <= v.length() - u.length() - 1;
      if (!ok) {
        Json w = pair_witness("u", u, "v", v);
        w["P"] = to_json(p);
        return w;
      }
    }
  }
  return kPass;
}

QPoly bar_shift(const QPoly& p, int d) {
  // q^d p(1/q)
  std::vector<mpz_class> c(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(d - k)] = p.coeff(k);
  return QPoly(std::move(c));
}

Witness kl_inversion_identity(const Context& ctx) {
  auto& oracle = shared_oracle(ctx.n);
  const auto elems = all_permutations(ctx.n);
  for (const auto& v : elems) {
    for (const auto& u : elems) {
      if (!bruhat_leq(u, v)) continue;
      const QPoly p = oracle.kl_polynomial(u, v);
      const QPoly lhs = bar_shift(p, v.length() - u.length()) - p;
      QPoly rhs;
      for (const auto& z : elems) {
        if (z != u && bruhat_leq(u, z) && bruhat_leq(z, v)) rhs += oracle.r_polynomial(u, z) * oracle.kl_polynomial(z, v);
      }
      if (lhs != rhs) return pair_witness("u", u, "v", v);
    }
  }
  return kPass;
}

Witness kl_y_chain(const Context& ctx) {
  auto& oracle = shared_oracle(ctx.n);
  for (int i = 1; i <= ctx.n; ++i) {
    for (int j = i; j <= ctx.n; ++j) {
      const QPoly p = oracle.kl_polynomial(y_rep(j, ctx.n), y_rep(i, ctx.n));
      if (p.eval(1) != 1) return Json{{"i", i}, {"j", j}, {"P", to_json(p)}};
    }
  }
  if (!oracle.cell_kl_matrix().is_upper_triangular()) return Json{{"matrix", to_json(oracle.cell_kl_matrix())}};
  return kPass;
}

Witness kl_cell_matrix_inverse(const Context& ctx) {
  const IntMatrix product = shared_oracle(ctx.n).cell_kl_matrix() * jordan_matrix(ctx.n);
  const IntMatrix id = IntMatrix::identity(static_cast<std::size_t>(ctx.n));
  if (product != id) return matrix_witness(product, id);
  return kPass;
}

// ---------------------------------------------------------------- dyck

Witness dyck_brenti_examples(const Context&) {
  struct Case {
    std::vector<int> outer, inner;
    bool dyck;
  };
  const std::vector<Case> cases = {
      {{3, 1}, {2}, true},        {{3, 1}, {1}, false},    {{4, 4, 4, 4}, {1}, true},
      {{4, 4, 4, 3}, {}, false},  {{4, 4, 4, 3}, {1}, true},
  };
  for (const auto& c : cases) {
    const SkewPartition eta{Partition(c.outer), Partition(c.inner)};
    if (is_dyck(eta) != c.dyck) return Json{{"shape", to_json(eta)}, {"expected", c.dyck}};
  }
  // The outer border strip of [3,2] is connected but not Dyck.
  const BoxSet strip = outer_border_strip(SkewPartition(Partition({3, 2})));
  if (connected_components(strip).size() != 1 || is_dyck_cbs(strip)) return Json{{"shape", "[3,2]"}};
  return kPass;
}

Witness dyck_psi_map(const Context& ctx) {
  for (int i = 1; i <= ctx.n; ++i) {
    const Partition got = psi_map(x_rep(i, ctx.n));
    if (got != Partition(std::vector<int>(static_cast<std::size_t>(ctx.n - i), 1))) {
      return Json{{"i", i}, {"psi", to_json(got)}};
    }
  }
  if (ctx.n <= 8) {
    int count = 0;
    for (const auto& w : all_permutations(ctx.n)) count += is_minimal_coset_rep(w) ? 1 : 0;
    if (count != ctx.n) return Json{{"representatives", count}};
  }
  return kPass;
}

Witness dyck_jordan_block(const Context& ctx) {
  const IntMatrix j = jordan_matrix(ctx.n);
  const IntMatrix want = bidiagonal_ones(ctx.n);
  if (j != want) return matrix_witness(j, want);
  return kPass;
}

Witness dyck_depth_parity(const Context& ctx) {
  auto rng = stream(ctx, "dyck.depth_parity");
  const int box = std::clamp(ctx.n, 3, 7);
  std::uniform_int_distribution<int> part(0, box);
  auto random_partition = [&] {
    std::vector<int> p;
    for (int r = 0; r < box; ++r) p.push_back(part(rng));
    std::sort(p.rbegin(), p.rend());
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(p);
  };
  for (int trial = 0; trial < 400; ++trial) {
    Partition a = random_partition(), b = random_partition();
    if (!a.contains(b)) std::swap(a, b);
    if (!a.contains(b)) continue;
    const SkewPartition eta(a, b);
    if (is_dyck(eta) && (eta.size() - depth(eta)) % 2 != 0) return Json{{"shape", to_json(eta)}};
  }
  return kPass;
}

Witness dyck_deodhar(const Context& ctx) {
  if (!deodhar_inversion_check(ctx.n)) return Json{{"n", ctx.n}};
  return kPass;
}

// ---------------------------------------------------------------- weights

std::vector<Rational> negated(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(-x);
  return out;
}

Witness weights_alternating(const Context& ctx) {
  auto rng = stream(ctx, "weights.alternating");
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_regular_dominant(ctx.n, rng).a();
    const auto minus_a = negated(a);
    Rational sum = 0;
    for (int i = 1; i <= ctx.n; ++i) {
      const Rational h = h_L(act(y_rep(i, ctx.n), minus_a));
      if (h != weyl_dim(a, i)) return Json{{"i", i}, {"h_L", to_json(h)}, {"weyl_dim", to_json(weyl_dim(a, i))}};
      sum += i % 2 == 0 ? h : Rational(-h);
    }
    if (sum != 0) {
      Json w = Json::array();
      for (const auto& x : a) w.push_back(to_json(x));
      return Json{{"a", w}, {"sum", to_json(sum)}};
    }
  }
  return kPass;
}

Witness weights_degree_identity(const Context& ctx) {
  auto rng = stream(ctx, "weights.degree_identity");
  const int n = ctx.n;
  for (int trial = 0; trial < 20; ++trial) {
    const WeightVector lambda = random_regular_dominant(n, rng);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Rational sum = 0;
        for (int k : bracket_set(i, n)) {
          for (int l : bracket_set(j, n)) sum += bernstein_c(v_cycle(k, l, n), lambda);
        }
        if (sum != dim_F(i, j, lambda)) {
          return Json{{"lambda", to_json(lambda)}, {"i", i}, {"j", j}, {"sum", to_json(sum)}};
        }
      }
    }
  }
  return kPass;
}

// p_{y_i}(-a) as the KL sum over the y-chain.
Rational goldie_via_kl(KlOracle& oracle, int i, const std::vector<Rational>& a) {
  const int n = oracle.degree();
  const auto minus_a = negated(a);
  Rational sum = 0;
  for (int j = i; j <= n; ++j) {
    const mpz_class m = oracle.verma_multiplicity(y_rep(i, n), y_rep(j, n));
    sum += Rational(m) * h_L(act(y_rep(j, n), minus_a));
  }
  return sum;
}

Witness weights_goldie_kl(const Context& ctx) {
  auto rng = stream(ctx, "weights.goldie_kl");
  auto& oracle = shared_oracle(ctx.n);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_regular_dominant(ctx.n, rng).a();
    for (int i = 2; i <= ctx.n; ++i) {
      const Rational kl = goldie_via_kl(oracle, i, a);
      if (kl != goldie_eval(i, a)) return Json{{"i", i}, {"kl", to_json(kl)}, {"closed", to_json(goldie_eval(i, a))}};
    }
  }
  return kPass;
}

Witness weights_positivity_offset(const Context& ctx) {
  auto rng = stream(ctx, "weights.positivity_offset");
  const int n = ctx.n;
  for (int trial = 0; trial < 5; ++trial) {
    const WeightVector lambda = random_regular_dominant(n, rng);
    auto shift = [](std::vector<Rational> v, const Rational& by) {
      for (auto& x : v) x += by;
      return v;
    };
    const WeightVector moved(shift(lambda.a(), Rational(7, 3)), shift(lambda.b(), Rational(-5, 2)));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (dim_F(i, j, lambda) != dim_F(i, j, moved)) return Json{{"lambda", to_json(lambda)}, {"i", i}, {"j", j}};
        if (i == j) continue;
        const Permutation w = w_cycle(i, j, n);
        const Rational c = bernstein_c(w, lambda);
        if (c <= 0 || c != bernstein_c(w, moved)) {
          return Json{{"lambda", to_json(lambda)}, {"w", to_json(w)}, {"c", to_json(c)}};
        }
      }
    }
  }
  return kPass;
}

Witness weights_rearrangement_gap(const Context& ctx) {
  auto rng = stream(ctx, "weights.rearrangement_gap");
  const WeightVector lambda = random_regular_dominant(ctx.n, rng);
  for (const auto& w : all_permutations(ctx.n)) {
    const Rational gap = rearrangement_gap(lambda, w);
    if (w.is_identity() ? gap != 0 : gap <= 0) {
      return Json{{"lambda", to_json(lambda)}, {"w", to_json(w)}, {"gap", to_json(gap)}};
    }
  }
  return kPass;
}

Witness weights_spot_values(const Context&) {
  const WeightVector lambda = WeightVector::from_integers({3, 2, 1, 0, 3, 2, 1, 0});
  const std::vector<std::pair<int, int>> terms = {{2, 3}, {2, 4}, {3, 3}, {3, 4}};
  const std::vector<long> want = {2, 1, 4, 2};
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Rational c = bernstein_c(v_cycle(terms[k].first, terms[k].second, 4), lambda);
    if (c != want[k]) return Json{{"v", {terms[k].first, terms[k].second}}, {"c", to_json(c)}};
  }
  if (dim_F(2, 3, lambda) != 9) return Json{{"dim_F", to_json(dim_F(2, 3, lambda))}};
  return kPass;
}

// ---------------------------------------------------------------- langlands

// Classification of small integer multisets straight from the definition:
// try every arrangement of every submultiset of size n or n - 1.
using IntChar = std::pair<long, long>;

bool chain_arrangement_exists(std::vector<IntChar> chars) {
  std::sort(chars.begin(), chars.end());
  do {
    bool ok = true;
    for (std::size_t k = 1; k < chars.size() && ok; ++k) {
      ok = chars[k - 1].first > chars[k].first && chars[k - 1].second > chars[k].second;
    }
    if (ok) return true;
  } while (std::next_permutation(chars.begin(), chars.end()));
  return false;
}

GkClass brute_force_class(const std::vector<IntChar>& gamma) {
  if (chain_arrangement_exists(gamma)) return GkClass::Zero;
  for (std::size_t drop = 0; drop < gamma.size(); ++drop) {
    std::vector<IntChar> rest;
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      if (k != drop) rest.push_back(gamma[k]);
    }
    if (chain_arrangement_exists(rest)) return GkClass::Minimal;
  }
  return GkClass::Larger;
}

Witness lang_classifier_bruteforce(const Context& ctx) {
  constexpr int kGrid = 5;
  std::vector<IntChar> grid;
  for (long a = 0; a < kGrid; ++a) {
    for (long b = 0; b < kGrid; ++b) grid.emplace_back(a, b);
  }
  // Nondecreasing index sequences enumerate multisets.
  std::vector<std::size_t> idx(static_cast<std::size_t>(ctx.n), 0);
  while (true) {
    std::vector<IntChar> gamma;
    std::vector<Character> chars;
    for (std::size_t k : idx) {
      gamma.push_back(grid[k]);
      chars.emplace_back(Rational(grid[k].first), Rational(grid[k].second));
    }
    const GkClass fast = gk_dim_class(LanglandsParameter(chars));
    const GkClass slow = brute_force_class(gamma);
    if (fast != slow) {
      return Json{{"gamma", to_json(LanglandsParameter(chars))}, {"classifier", to_string(fast)},
                  {"brute_force", to_string(slow)}};
    }
    int pos = ctx.n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == grid.size() - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto k = static_cast<std::size_t>(pos); k < idx.size(); ++k) idx[k] = next;
  }
  return kPass;
}

Witness lang_minimal_iff_cycle(const Context& ctx) {
  auto rng = stream(ctx, "lang.minimal_iff_cycle");
  for (int trial = 0; trial < 2; ++trial) {
    const WeightVector lambda = random_regular_dominant(ctx.n, rng);
    for (const auto& w : all_permutations(ctx.n)) {
      const GkClass got = gk_dim_class(parameter_from(lambda, w));
      const GkClass want = w.is_identity() ? GkClass::Zero : is_w_cycle(w) ? GkClass::Minimal : GkClass::Larger;
      if (got != want) return Json{{"lambda", to_json(lambda)}, {"w", to_json(w)}, {"class", to_string(got)}};
    }
  }
  return kPass;
}

Witness lang_injective(const Context& ctx) {
  auto rng = stream(ctx, "lang.injective");
  const WeightVector lambda = random_regular_dominant(ctx.n, rng);
  std::map<std::string, Permutation> seen;
  for (const auto& w : all_permutations(ctx.n)) {
    auto [it, inserted] = seen.emplace(parameter_from(lambda, w).to_string(), w);
    if (!inserted) return pair_witness("u", it->second, "v", w);
  }
  return kPass;
}

Witness lang_singular_point(const Context& ctx) {
  const int n = ctx.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const SingularPoint sp = singular_point(i, j, n);
      if (!is_dominant(sp.lambda) || is_regular(sp.lambda) || gk_dim_class(sp.gamma) != GkClass::Minimal) {
        return Json{{"i", i}, {"j", j}, {"lambda", to_json(sp.lambda)}, {"gamma", to_json(sp.gamma)}};
      }
    }
  }
  return kPass;
}

Witness lang_examples(const Context&) {
  auto param = [](std::vector<std::pair<long, long>> v) {
    std::vector<Character> c;
    for (auto [a, b] : v) c.emplace_back(Rational(a), Rational(b));
    return LanglandsParameter(c);
  };
  if (gk_dim_class(param({{2, 2}, {1, 1}, {0, 0}})) != GkClass::Zero) return Json{{"example", 1}};
  if (gk_dim_class(param({{2, 1}, {1, 2}, {0, 0}})) != GkClass::Minimal) return Json{{"example", 2}};
  if (gk_dim_class(param({{1, 0}, {1, 0}, {0, 1}})) != GkClass::Larger) return Json{{"example", 3}};
  const WeightVector lambda = WeightVector::from_integers({2, 1, 0, 2, 1, 0});
  if (parameter_from(lambda, w_cycle(1, 2, 3)) != param({{2, 1}, {1, 2}, {0, 0}})) return Json{{"example", 4}};
  return kPass;
}

// ---------------------------------------------------------------- coherent

Witness coh_transition_inverse(const Context& ctx) {
  const IntMatrix a = transition_psi_to_psibar(ctx.n);
  const IntMatrix b = transition_psibar_to_psi(ctx.n);
  const IntMatrix id = IntMatrix::identity(a.size());
  if (a * b != id) return matrix_witness(a * b, id);
  if (b * a != id) return matrix_witness(b * a, id);
  return kPass;
}

Witness coh_psibar_expansion(const Context& ctx) {
  for (int i = 2; i <= ctx.n; ++i) {
    for (int j = 2; j <= ctx.n; ++j) {
      CoherentVector want(ctx.n);
      want.add(BasisLabel::vbar(i, j), 1);
      const CoherentVector got = expand(psibar_in_psi(i, j, ctx.n));
      if (got != want) return Json{{"i", i}, {"j", j}, {"expansion", to_json(got)}};
    }
  }
  return kPass;
}

Witness coh_row_relations(const Context& ctx) {
  if (!psi_row_relations(ctx.n)) return Json{{"n", ctx.n}};
  return kPass;
}

Witness coh_basis_determinant(const Context& ctx) {
  const mpz_class det = transition_psi_to_psibar(ctx.n).determinant();
  if (!basis_check(ctx.n)) return Json{{"determinant", to_json(det)}};
  return kPass;
}

Witness coh_degree_functional(const Context& ctx) {
  auto rng = stream(ctx, "coh.degree_functional");
  const int n = ctx.n;
  for (int trial = 0; trial < 3; ++trial) {
    const WeightVector lambda = random_regular_dominant(n, rng);
    CoherentVector triv(n);
    triv.add(BasisLabel::trivial(), 1);
    if (degree_functional(triv, lambda) != 0) return Json{{"lambda", to_json(lambda)}, {"triv", true}};
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Rational got = degree_functional(psi_induced(i, j, n), lambda);
        if (got != weyl_dim(lambda.a(), i) * weyl_dim(lambda.b(), j)) {
          return Json{{"lambda", to_json(lambda)}, {"i", i}, {"j", j}, {"degree", to_json(got)}};
        }
      }
    }
  }
  return kPass;
}

Witness coh_composition_series(const Context& ctx) {
  auto rng = stream(ctx, "coh.composition_series");
  const int n = ctx.n;
  const WeightVector lambda = random_regular_dominant(n, rng);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto series = composition_series(i, j, lambda);
      Rational degree = 0;
      bool has_f = false;
      bool ok = true;
      for (const auto& c : series) {
        ok = ok && c.multiplicity == 1;
        if (c.k == 0) {
          has_f = true;
          ok = ok && c.gk_class == GkClass::Zero;
        } else {
          ok = ok && c.gk_class == GkClass::Minimal;
          degree += bernstein_c(v_cycle(c.k, c.l, n), lambda);
        }
      }
      if (!ok || has_f != (i == j) || degree != dim_F(i, j, lambda)) {
        Json parts = Json::array();
        for (const auto& c : series) parts.push_back(to_json(c));
        return Json{{"lambda", to_json(lambda)}, {"i", i}, {"j", j}, {"series", parts}};
      }
    }
  }
  return kPass;
}

// The degree identity with every Goldie polynomial evaluated through KL
// multiplicities instead of the closed form.
Witness coh_degree_via_kl(const Context& ctx) {
  auto rng = stream(ctx, "coh.degree_via_kl");
  auto& oracle = shared_oracle(ctx.n);
  const int n = ctx.n;
  const WeightVector lambda = random_regular_dominant(n, rng);
  std::vector<Rational> pa(static_cast<std::size_t>(n + 1)), pb(static_cast<std::size_t>(n + 1));
  for (int k = 2; k <= n; ++k) {
    pa[static_cast<std::size_t>(k)] = goldie_via_kl(oracle, k, lambda.a());
    pb[static_cast<std::size_t>(k)] = goldie_via_kl(oracle, k, lambda.b());
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rational total = 0;
      const CoherentVector psi = psi_induced(i, j, n);
      for (const auto& [label, c] : psi.coords()) {
        if (!label.triv) total += Rational(c) * pa[static_cast<std::size_t>(label.k)] * pb[static_cast<std::size_t>(label.l)];
      }
      if (total != dim_F(i, j, lambda)) return Json{{"lambda", to_json(lambda)}, {"i", i}, {"j", j}};
    }
  }
  return kPass;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = {
      {"symgroup", "sym.length_inverse", false, 8, sym_length_inverse},
      {"symgroup", "sym.bruhat_bounds", false, 8, sym_bruhat_bounds},
      {"symgroup", "sym.bruhat_closure", false, 5, sym_bruhat_closure},
      {"symgroup", "sym.bruhat_symmetries", false, kAnyN, sym_bruhat_symmetries},
      {"symgroup", "sym.named_elements", false, kAnyN, sym_named_elements},

      {"tableaux", "tab.rs_roundtrip", false, kAnyN, tab_rs_roundtrip},
      {"tableaux", "tab.cell_enumeration", false, 8, tab_cell_enumeration},
      {"tableaux", "tab.minimal_elements", false, kAnyN, tab_minimal_elements},
      {"tableaux", "tab.cmin", false, kAnyN, tab_cmin},

      {"kl", "kl.normalization", true, 6, kl_normalization},
      {"kl", "kl.inversion_identity", true, 4, kl_inversion_identity},
      {"kl", "kl.y_chain", true, kAnyN, kl_y_chain},
      {"kl", "kl.cell_matrix_inverse", true, kAnyN, kl_cell_matrix_inverse},

      {"dyck", "dyck.brenti_examples", false, kAnyN, dyck_brenti_examples},
      {"dyck", "dyck.psi_map", false, kAnyN, dyck_psi_map},
      {"dyck", "dyck.jordan_block", false, kAnyN, dyck_jordan_block},
      {"dyck", "dyck.depth_parity", false, kAnyN, dyck_depth_parity},
      {"dyck", "dyck.deodhar_inversion", true, kAnyN, dyck_deodhar},

      {"weights", "weights.alternating", false, kAnyN, weights_alternating},
      {"weights", "weights.degree_identity", false, kAnyN, weights_degree_identity},
      {"weights", "weights.goldie_kl", true, kAnyN, weights_goldie_kl},
      {"weights", "weights.positivity_offset", false, kAnyN, weights_positivity_offset},
      {"weights", "weights.rearrangement_gap", false, 8, weights_rearrangement_gap},
      {"weights", "weights.spot_values", false, kAnyN, weights_spot_values},

      {"langlands", "lang.examples", false, kAnyN, lang_examples},
      {"langlands", "lang.classifier_bruteforce", false, 5, lang_classifier_bruteforce},
      {"langlands", "lang.minimal_iff_cycle", false, 8, lang_minimal_iff_cycle},
      {"langlands", "lang.injective", false, 7, lang_injective},
      {"langlands", "lang.singular_point", false, kAnyN, lang_singular_point},

      {"coherent", "coh.transition_inverse", false, kAnyN, coh_transition_inverse},
      {"coherent", "coh.psibar_expansion", false, kAnyN, coh_psibar_expansion},
      {"coherent", "coh.row_relations", false, kAnyN, coh_row_relations},
      {"coherent", "coh.basis_determinant", false, kAnyN, coh_basis_determinant},
      {"coherent", "coh.degree_functional", false, kAnyN, coh_degree_functional},
      {"coherent", "coh.composition_series", false, kAnyN, coh_composition_series},
      {"coherent", "coh.degree_via_kl", true, kAnyN, coh_degree_via_kl},
  };
  return checks;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

Json VerificationReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["n"] = n;
  out["seed"] = seed;
  out["passed"] = passed();
  out["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"skipped", count(CheckStatus::Skipped)}};
  Json list = Json::array();
  for (const auto& c : checks) {
    Json entry;
    entry["suite"] = c.suite;
    entry["id"] = c.id;
    entry["status"] = to_string(c.status);
    if (!c.note.empty()) entry["note"] = c.note;
    if (c.status == CheckStatus::Fail) entry["witness"] = c.witness;
    entry["wall_time_ms"] = c.wall_time_ms;
    list.push_back(std::move(entry));
  }
  out["checks"] = std::move(list);
  out["wall_time_ms"] = wall_time_ms;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"symgroup", "tableaux", "kl",       "dyck",
                                                 "weights",  "langlands", "coherent", "all"};
  return names;
}

VerificationReport run_verify(const VerifyOptions& options) {
  if (options.n < 2) throw DomainError("verify needs n >= 2");
  if (options.n > Permutation::kMaxDegree) throw DomainError("verify supports n <= 64");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw DomainError("unknown suite '" + options.suite + "'");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<const CheckDef*> selected;
  for (const auto& def : registry()) {
    if (options.suite == "all" || options.suite == def.suite) selected.push_back(&def);
  }

  VerificationReport report;
  report.suite = options.suite;
  report.n = options.n;
  report.seed = options.seed;
  report.checks.resize(selected.size());

  const Context ctx{options.n, options.seed};
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr limit_error;

  auto worker = [&] {
    for (std::size_t k = next++; k < selected.size(); k = next++) {
      const CheckDef& def = *selected[k];
      CheckResult& result = report.checks[k];
      result.suite = def.suite;
      result.id = def.id;
      if (def.needs_kl && options.n > options.oracle_max_n) {
        result.status = CheckStatus::Skipped;
        result.note = "n exceeds the KL oracle bound " + std::to_string(options.oracle_max_n);
        continue;
      }
      if (options.n > def.max_n) {
        result.status = CheckStatus::Skipped;
        result.note = "exhaustive check limited to n <= " + std::to_string(def.max_n);
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        if (auto witness = def.run(ctx)) {
          result.status = CheckStatus::Fail;
          result.witness = std::move(*witness);
        }
      } catch (const ResourceLimitError&) {
        std::lock_guard lock(error_mutex);
        if (!limit_error) limit_error = std::current_exception();
      } catch (const std::exception& e) {
        result.status = CheckStatus::Fail;
        result.note = e.what();
        result.witness = Json{{"exception", e.what()}};
      }
      result.wall_time_ms = elapsed_ms(t0);
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(selected.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (limit_error) std::rethrow_exception(limit_error);
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

} // namespace gkmin
