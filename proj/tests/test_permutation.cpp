#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "gkmin/error.hpp"
#include "gkmin/permutation.hpp"

using namespace gkmin;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// All products of subwords of all reduced words of v, as a set.
std::set<Permutation> subword_products(const Permutation& v) {
  const int n = v.degree();
  // Reduced words by walking down right descents.
  std::vector<std::vector<int>> words;
  std::vector<int> word;
  std::function<void(const Permutation&)> walk = [&](const Permutation& w) {
    if (w.is_identity()) {
      words.emplace_back(word.rbegin(), word.rend());
      return;
    }
    for (int k = 1; k < n; ++k) {
      if (w(k) > w(k + 1)) {
        word.push_back(k);
        walk(compose(w, simple_reflection(k, n)));
        word.pop_back();
      }
    }
  };
  walk(v);
  std::set<Permutation> out;
  for (const auto& rw : words) {
    const auto len = rw.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      Permutation p(n);
      for (std::size_t k = 0; k < len; ++k) {
        if (mask & (std::size_t{1} << k)) p = compose(p, simple_reflection(rw[k], n));
      }
      out.insert(p);
    }
  }
  return out;
}

// Tableau criterion: sorted prefixes of u are dominated entrywise by those of v.
bool ehresmann_leq(const Permutation& u, const Permutation& v) {
  for (int k = 1; k <= u.degree(); ++k) {
    std::vector<int> a(u.images().begin(), u.images().begin() + k);
    std::vector<int> b(v.images().begin(), v.images().begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int s = 0; s < k; ++s) {
      if (a[static_cast<std::size_t>(s)] > b[static_cast<std::size_t>(s)]) return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("construction validates one-line notation") {
  CHECK_THROWS_AS(P({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(P({0, 1}), DomainError);
  CHECK_THROWS_AS(P({}), DomainError);
  CHECK(P({3, 1, 2}).to_string() == "3,1,2");
  CHECK(Permutation(4).is_identity());
}

TEST_CASE("compose uses u(v(k))") {
  CHECK(compose(P({2, 1, 3}), P({1, 3, 2})) == P({2, 3, 1}));
  const Permutation w = P({4, 1, 3, 2});
  CHECK(compose(w, Permutation(4)) == w);
  CHECK(compose(x_rep(1, 3).inverse(), x_rep(3, 3)) == P({2, 3, 1}));
  CHECK_THROWS_AS(compose(P({1, 2}), P({1, 2, 3})), DomainError);
}

TEST_CASE("length examples") {
  CHECK(P({1, 2, 3}).length() == 0);
  CHECK(P({3, 2, 1}).length() == 3);
  for (int n = 1; n <= 12; ++n) {
    CHECK(longest_element(n).length() == n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) CHECK(x_rep(i, n).length() == n - i);
  }
}

TEST_CASE("named elements") {
  CHECK(longest_element(3) == P({3, 2, 1}));
  CHECK(longest_parabolic(4) == P({3, 2, 1, 4}));
  CHECK(longest_parabolic(2) == P({1, 2}));
  CHECK(w_cycle(1, 3, 3) == P({2, 3, 1}));
  CHECK(w_cycle(3, 1, 3) == P({3, 1, 2}));
  CHECK(w_cycle(2, 2, 5).is_identity());
  CHECK(x_rep(2, 4) == P({1, 4, 2, 3}));
  CHECK(v_cycle(3, 2, 4) == w_cycle(3, 1, 4));
  for (int n = 2; n <= 9; ++n) {
    CHECK(x_rep(n, n).is_identity());
    CHECK(x_rep(1, n) == compose(longest_parabolic(n), longest_element(n)));
    CHECK(v_cycle(2, 2, n) == w_cycle(1, 2, n));
    for (int i = 1; i <= n; ++i) CHECK(y_rep(i, n) == compose(longest_parabolic(n), x_rep(i, n)));
  }
  CHECK_THROWS_AS(w_cycle(0, 2, 3), DomainError);
  CHECK_THROWS_AS(v_cycle(1, 2, 3), DomainError);
  CHECK_THROWS_AS(x_rep(4, 3), DomainError);
}

TEST_CASE("bracket sets") {
  CHECK(bracket_set(1, 5) == std::set<int>{2});
  CHECK(bracket_set(3, 5) == std::set<int>{3, 4});
  CHECK(bracket_set(5, 5) == std::set<int>{5});
  CHECK(bracket_set(1, 2) == std::set<int>{2});
  CHECK(bracket_set(2, 2) == std::set<int>{2});
  CHECK_THROWS_AS(bracket_set(0, 5), DomainError);
}

TEST_CASE("w cycles invert and v cycles cover the off-diagonal cycles") {
  for (int n = 2; n <= 6; ++n) {
    std::set<Permutation> ws, vs;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(w_cycle(i, j, n).inverse() == w_cycle(j, i, n));
        if (i != j) {
          ws.insert(w_cycle(i, j, n));
          CHECK(is_w_cycle(w_cycle(i, j, n)));
        }
        CHECK(compose(x_rep(i, n).inverse(), x_rep(j, n)) == w_cycle(i, j, n));
      }
    }
    for (int k = 2; k <= n; ++k) {
      for (int l = 2; l <= n; ++l) {
        vs.insert(v_cycle(k, l, n));
        CHECK(v_cycle(k, l, n).inverse() == v_cycle(l, k, n));
      }
    }
    CHECK(ws == vs);
    CHECK(ws.size() == static_cast<std::size_t>((n - 1) * (n - 1)));
    CHECK_FALSE(is_w_cycle(Permutation(n)));
  }
}

TEST_CASE("length parity and inverse, exhaustive n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto all = all_permutations(n);
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& w : all) {
      CHECK(w.length() == w.inverse().length());
      const auto& u = all[pick(rng)];
      CHECK((compose(u, w).length() - u.length() - w.length()) % 2 == 0);
    }
  }
}

TEST_CASE("x_i are the minimal coset representatives") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Permutation> parabolic;
    for (const auto& u : all_permutations(n)) {
      if (u(n) == n) parabolic.push_back(u);
    }
    std::set<Permutation> covered;
    for (int i = 1; i <= n; ++i) {
      const Permutation x = x_rep(i, n);
      for (const auto& u : parabolic) {
        const Permutation ux = compose(u, x);
        CHECK(ux.length() >= x.length());
        covered.insert(ux);
      }
      if (i < n) {
        CHECK(bruhat_leq(x_rep(i + 1, n), x));
        CHECK_FALSE(bruhat_leq(x, x_rep(i + 1, n)));
        CHECK(bruhat_leq(y_rep(i + 1, n), y_rep(i, n)));
      }
    }
    CHECK(covered.size() == all_permutations(n).size());
  }
}

TEST_CASE("bruhat examples") {
  CHECK_FALSE(bruhat_leq(P({2, 1, 3}), P({1, 3, 2})));
  CHECK_FALSE(bruhat_leq(P({1, 3, 2}), P({2, 1, 3})));
  for (int n = 1; n <= 10; ++n) CHECK(bruhat_leq(x_rep(n, n), x_rep(1, n)));
  CHECK_THROWS_AS(bruhat_leq(P({1, 2}), P({1, 2, 3})), DomainError);
}

TEST_CASE("bruhat order matches the subword definition, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const auto& v : all) {
      const auto below = subword_products(v);
      for (const auto& u : all) CHECK(bruhat_leq(u, v) == below.contains(u));
    }
  }
}

TEST_CASE("bruhat order matches the tableau criterion") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (const auto& u : all) {
      for (const auto& v : all) CHECK(bruhat_leq(u, v) == ehresmann_leq(u, v));
    }
  }
  std::mt19937_64 rng(7);
  for (int n : {6, 7, 12, 30}) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    for (int trial = 0; trial < 2000; ++trial) {
      std::shuffle(a.begin(), a.end(), rng);
      const Permutation u(a);
      // Comparable pairs are rare among random pairs; swap two entries of u.
      std::vector<int> b = a;
      std::uniform_int_distribution<std::size_t> pos(0, b.size() - 1);
      std::swap(b[pos(rng)], b[pos(rng)]);
      const Permutation v(b);
      CHECK(bruhat_leq(u, v) == ehresmann_leq(u, v));
      CHECK(bruhat_leq(v, u) == ehresmann_leq(v, u));
    }
  }
}

TEST_CASE("all_permutations is lexicographic and bounded") {
  const auto s3 = all_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == P({1, 2, 3}));
  CHECK(s3.back() == P({3, 2, 1}));
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK_THROWS_AS(all_permutations(11), ResourceLimitError);
}

TEST_CASE("degree 64 is supported for combinatorics") {
  const int n = Permutation::kMaxDegree;
  CHECK(longest_element(n).length() == n * (n - 1) / 2);
  CHECK(bruhat_leq(x_rep(n, n), x_rep(1, n)));
  CHECK_THROWS_AS(Permutation(n + 1), DomainError);
}
