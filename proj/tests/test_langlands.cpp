#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gkmin/error.hpp"
#include "gkmin/langlands.hpp"

using namespace gkmin;

namespace {

LanglandsParameter param(std::vector<std::pair<Rational, Rational>> v) {
  std::vector<Character> c;
  for (auto& [a, b] : v) c.emplace_back(a, b);
  return LanglandsParameter(c);
}

// Tries every arrangement of the entries.
bool ordered_by_search(std::vector<Character> gamma) {
  std::vector<std::size_t> order(gamma.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool chain = true;
    for (std::size_t k = 1; k < order.size() && chain; ++k) {
      const auto& prev = gamma[order[k - 1]];
      const auto& cur = gamma[order[k]];
      chain = succ(prev.a(), cur.a()) && succ(prev.b(), cur.b());
    }
    if (chain) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

GkClass class_by_search(const std::vector<Character>& gamma) {
  if (ordered_by_search(gamma)) return GkClass::Zero;
  for (std::size_t drop = 0; drop < gamma.size(); ++drop) {
    std::vector<Character> rest = gamma;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
    if (ordered_by_search(rest)) return GkClass::Minimal;
  }
  return GkClass::Larger;
}

} // namespace

TEST_CASE("succ and characters") {
  CHECK(succ(2, 1));
  CHECK_FALSE(succ(1, 1));
  CHECK(succ(Rational(1, 2), Rational(-1, 2)));
  CHECK_FALSE(succ(Rational(1, 2), 0));
  CHECK_FALSE(succ(0, 3));
  CHECK_THROWS_AS(Character(Rational(1, 2), 0), DomainError);
  CHECK_NOTHROW(Character(Rational(1, 2), Rational(-3, 2)));
}

TEST_CASE("parameters are multisets") {
  const auto g = param({{0, 0}, {2, 1}, {1, 2}});
  CHECK(g == param({{1, 2}, {0, 0}, {2, 1}}));
  CHECK(g.to_string() == "2:1;1:2;0:0");
  CHECK(g.size() == 3);
  CHECK_FALSE(param({{1, 1}, {1, 1}}) == param({{1, 1}}));
}

TEST_CASE("order and integrality examples") {
  CHECK(is_totally_ordered(param({{2, 2}, {1, 1}, {0, 0}})));
  CHECK(is_integral(param({{2, 1}, {1, 2}, {0, 0}})));
  CHECK_FALSE(is_totally_ordered(param({{2, 1}, {1, 2}, {0, 0}})));
  CHECK_FALSE(is_integral(param({{0, 0}, {Rational(1, 2), Rational(1, 2)}})));
  CHECK_FALSE(is_totally_ordered(param({{1, 1}, {1, 1}})));
}

TEST_CASE("classifier examples") {
  CHECK(gk_dim_class(param({{2, 2}, {1, 1}, {0, 0}})) == GkClass::Zero);
  CHECK(gk_dim_class(param({{2, 1}, {1, 2}, {0, 0}})) == GkClass::Minimal);
  CHECK(gk_dim_class(param({{1, 0}, {1, 0}, {0, 1}})) == GkClass::Larger);
  CHECK_THROWS_AS(gk_dim_class(param({{1, 1}})), DomainError);
  CHECK(gk_dimension(GkClass::Zero, 4) == 0);
  CHECK(gk_dimension(GkClass::Minimal, 4) == 6);
  CHECK_FALSE(gk_dimension(GkClass::Larger, 4).has_value());
  CHECK(to_string(GkClass::Minimal) == "Minimal");
}

TEST_CASE("classifier matches an arrangement search on a 5x5 grid, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<Character> chars;
      for (std::size_t k : idx) chars.emplace_back(Rational(static_cast<long>(k / 5)), Rational(static_cast<long>(k % 5)));
      CHECK(gk_dim_class(LanglandsParameter(chars)) == class_by_search(chars));
      int pos = n - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 24) --pos;
      if (pos < 0) break;
      const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
      for (auto k = static_cast<std::size_t>(pos); k < idx.size(); ++k) idx[k] = next;
    }
  }
}

TEST_CASE("classifier matches an arrangement search on random half-integral input") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> val(-6, 6);
  std::uniform_int_distribution<int> size(2, 6);
  std::bernoulli_distribution half(0.3);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Character> chars;
    const int n = size(rng);
    for (int k = 0; k < n; ++k) {
      const Rational shift = half(rng) ? Rational(1, 2) : Rational(0);
      // Chains are rare among random entries; bias towards a near-diagonal.
      const long a = val(rng);
      const long b = trial % 2 ? a + val(rng) % 2 : val(rng);
      chars.emplace_back(Rational(a) + shift, Rational(b) + shift);
    }
    CHECK(gk_dim_class(LanglandsParameter(chars)) == class_by_search(chars));
  }
}

TEST_CASE("parameters from weights") {
  const auto lambda = WeightVector::from_integers({2, 1, 0, 2, 1, 0});
  CHECK(parameter_from(lambda, Permutation(3)) == param({{2, 2}, {1, 1}, {0, 0}}));
  CHECK(parameter_from(lambda, w_cycle(1, 2, 3)) == param({{2, 1}, {1, 2}, {0, 0}}));
  const WeightVector offset({Rational(1, 2), Rational(-1, 2)}, {Rational(0), Rational(-1)});
  CHECK_THROWS_AS(parameter_from(offset, Permutation(2)), DomainError);
}

TEST_CASE("minimal exactly at the cycles, exhaustive n <= 6") {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 6; ++n) {
    const auto lambda = random_regular_dominant(n, rng);
    std::set<std::string> seen;
    for (const auto& w : all_permutations(n)) {
      const GkClass c = gk_dim_class(parameter_from(lambda, w));
      if (w.is_identity()) CHECK(c == GkClass::Zero);
      else if (is_w_cycle(w)) CHECK(c == GkClass::Minimal);
      else CHECK(c == GkClass::Larger);
      if (n <= 5) CHECK(seen.insert(parameter_from(lambda, w).to_string()).second);
    }
  }
}

TEST_CASE("singular points") {
  const SingularPoint sp = singular_point(1, 2, 4);
  CHECK(sp.i0 == 1);
  CHECK(sp.j0 == 1);
  CHECK(sp.lambda == WeightVector::from_integers({1, 1, 0, -1, 1, 1, 0, -1}));
  CHECK(sp.gamma == param({{1, 1}, {0, 0}, {-1, -1}, {1, 1}}));
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const SingularPoint p = singular_point(i, j, n);
        CHECK(p.i0 == (i < j ? i : i - 1));
        CHECK(p.j0 == (i < j ? j - 1 : j));
        CHECK(is_dominant(p.lambda));
        CHECK_FALSE(is_regular(p.lambda));
        CHECK(p.gamma.size() == n);
        CHECK(gk_dim_class(p.gamma) == GkClass::Minimal);
      }
    }
  }
  const SingularPoint odd = singular_point(2, 1, 3);
  CHECK(odd.lambda.a()[0] == Rational(3, 2) - 1);
  CHECK_THROWS_AS(singular_point(2, 2, 4), DomainError);
  CHECK_THROWS_AS(singular_point(0, 2, 4), DomainError);
}
