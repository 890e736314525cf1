#include <doctest.h>

#include <random>

#include "gkmin/error.hpp"
#include "gkmin/kl.hpp"
#include "gkmin/tableau.hpp"
#include "gkmin/weights.hpp"

using namespace gkmin;

namespace {

std::vector<Rational> R(std::vector<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Rational> negated(std::vector<Rational> v) {
  for (auto& x : v) x = -x;
  return v;
}

WeightVector W(std::vector<long> v) { return WeightVector::from_integers(v); }

} // namespace

TEST_CASE("regular and dominant") {
  CHECK(is_regular(W({2, 1, 0, 2, 1, 0})));
  CHECK(is_dominant(W({2, 1, 0, 2, 1, 0})));
  CHECK(is_dominant(W({1, 1, 0, -1, 1, 1, 0, -1})));
  CHECK_FALSE(is_regular(W({1, 1, 0, -1, 1, 1, 0, -1})));
  CHECK_FALSE(is_dominant(W({0, 1, 1, 0})));
  // Half-integral blocks still have integer differences.
  CHECK(is_dominant(WeightVector({Rational(1, 2), Rational(3, 2)}, {Rational(0), Rational(-1)})) == false);
  CHECK_THROWS_AS(WeightVector({Rational(1, 2), Rational(1)}, R({0, 1})), DomainError);
  CHECK_THROWS_AS(W({1, 2, 3}), DomainError);
  CHECK_THROWS_AS(WeightVector(R({1}), R({1, 2})), DomainError);
}

TEST_CASE("h_L and weyl dimensions") {
  CHECK(h_L(R({5, -3})) == 1);
  CHECK(h_L(R({2, 0, 7})) == 2);
  CHECK(h_L(act(y_rep(2, 4), negated(R({3, 2, 1, 0})))) == 3);
  const auto a3 = R({2, 1, 0});
  const auto a4 = R({3, 2, 1, 0});
  CHECK(weyl_dim(a3, 1) == 1);
  CHECK(weyl_dim(a3, 2) == 2);
  CHECK(weyl_dim(a3, 3) == 1);
  for (int i = 1; i <= 4; ++i) CHECK(weyl_dim(a4, i) == std::vector<long>{1, 3, 3, 1}[static_cast<std::size_t>(i - 1)]);
  CHECK_THROWS_AS(weyl_dim(a3, 0), DomainError);
  CHECK_THROWS_AS(weyl_dim(a3, 4), DomainError);
}

TEST_CASE("weyl_dim is h_L at -y_i a") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 9; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_regular_dominant(n, rng, 5).a();
      Rational alternating = 0;
      for (int i = 1; i <= n; ++i) {
        const Rational d = weyl_dim(a, i);
        CHECK(d == h_L(act(y_rep(i, n), negated(a))));
        CHECK(d > 0);
        alternating += (i % 2 == 0) ? d : Rational(-d);
      }
      CHECK(alternating == 0);
    }
  }
}

TEST_CASE("goldie values") {
  const auto a3 = R({2, 1, 0});
  const auto a4 = R({3, 2, 1, 0});
  CHECK(goldie_eval(2, a3) == 1);
  CHECK(goldie_eval(3, a3) == 1);
  CHECK(goldie_eval(2, a4) == 1);
  CHECK(goldie_eval(3, a4) == 2);
  CHECK(goldie_eval(4, a4) == 1);
  CHECK(weyl_dim(a4, 3) == goldie_eval(3, a4) + goldie_eval(4, a4));
  CHECK_THROWS_AS(goldie_eval(1, a4), DomainError);
  CHECK_THROWS_AS(goldie_eval(5, a4), DomainError);
}

TEST_CASE("weyl dimensions are consecutive sums of goldie values") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 10; ++n) {
    const auto a = random_regular_dominant(n, rng).a();
    CHECK(weyl_dim(a, 1) == goldie_eval(2, a));
    for (int i = 2; i < n; ++i) CHECK(weyl_dim(a, i) == goldie_eval(i, a) + goldie_eval(i + 1, a));
    CHECK(weyl_dim(a, n) == goldie_eval(n, a));
  }
}

TEST_CASE("goldie values agree with the KL sum, n <= 6") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    KlOracle oracle(n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_regular_dominant(n, rng).a();
      for (int i = 2; i <= n; ++i) {
        Rational sum = 0;
        for (int j = i; j <= n; ++j) {
          sum += Rational(oracle.verma_multiplicity(y_rep(i, n), y_rep(j, n))) * h_L(act(y_rep(j, n), negated(a)));
        }
        CHECK(sum == goldie_eval(i, a));
      }
    }
  }
}

TEST_CASE("bernstein degrees") {
  const auto l3 = W({2, 1, 0, 2, 1, 0});
  for (int k = 2; k <= 3; ++k) {
    for (int l = 2; l <= 3; ++l) CHECK(bernstein_c(v_cycle(k, l, 3), l3) == 1);
  }
  const auto l4 = W({3, 2, 1, 0, 3, 2, 1, 0});
  CHECK(bernstein_c(v_cycle(3, 3, 4), l4) == 4);
  CHECK(bernstein_c(v_cycle(2, 3, 4), l4) == 2);
  CHECK(bernstein_c(v_cycle(2, 4, 4), l4) == 1);
  CHECK(bernstein_c(v_cycle(3, 4, 4), l4) == 2);
  CHECK(dim_F(2, 3, l4) == 9);
  CHECK_THROWS_AS(bernstein_c(Permutation(4), l4), DomainError);
  CHECK_THROWS_AS(bernstein_c(v_cycle(2, 2, 4), W({1, 1, 0, -1, 3, 2, 1, 0})), DomainError);
  CHECK_THROWS_AS(bernstein_c(v_cycle(2, 2, 3), l4), DomainError);
}

TEST_CASE("bernstein degrees of v cycles factor through the y-chain") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 8; ++n) {
    const auto lambda = random_regular_dominant(n, rng);
    for (int k = 2; k <= n; ++k) {
      for (int l = 2; l <= n; ++l) {
        const Rational c = bernstein_c(v_cycle(k, l, n), lambda);
        CHECK(c == goldie_eval(k, lambda.a()) * goldie_eval(l, lambda.b()));
        CHECK(c > 0);
      }
    }
  }
}

TEST_CASE("degree identity over bracket sets, n <= 6") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto lambda = random_regular_dominant(n, rng);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          Rational sum = 0;
          for (int k : bracket_set(i, n)) {
            for (int l : bracket_set(j, n)) sum += bernstein_c(v_cycle(k, l, n), lambda);
          }
          CHECK(sum == dim_F(i, j, lambda));
        }
      }
    }
  }
}

TEST_CASE("dim_F examples and offset invariance") {
  const auto l3 = W({2, 1, 0, 2, 1, 0});
  CHECK(dim_F(2, 2, l3) == 4);
  CHECK(dim_F(1, 1, l3) == 1);
  const WeightVector shifted({Rational(5, 2), Rational(3, 2), Rational(1, 2)}, {Rational(-1, 3), Rational(-4, 3), Rational(-7, 3)});
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(dim_F(i, j, l3) == dim_F(i, j, shifted));
  }
  CHECK_THROWS_AS(dim_F(1, 1, W({0, 1, 1, 0})), DomainError);
}

TEST_CASE("rearranged weights") {
  const auto l3 = W({2, 1, 0, 2, 1, 0});
  CHECK(lambda_rearrange(l3, 3, 3) == l3);
  CHECK(lambda_rearrange(l3, 1, 2) == W({1, 0, 2, 2, 0, 1}));
  CHECK(lambda_rearrange(lambda_rearrange(l3, 3, 3), 3, 3) == l3);
  CHECK_THROWS_AS(lambda_rearrange(l3, 0, 1), DomainError);
}

TEST_CASE("extremal weight and rearrangement gap") {
  const auto l3 = W({2, 1, 0, 2, 1, 0});
  CHECK(rearrangement_gap(l3, Permutation(3)) == 0);
  CHECK(rearrangement_gap(l3, Permutation({2, 1, 3})) == 1);
  CHECK(extremal_weight(l3, Permutation({2, 1, 3})) == R({1, -1, 0}));
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 6; ++n) {
    const auto lambda = random_regular_dominant(n, rng);
    for (const auto& w : all_permutations(n)) {
      if (!w.is_identity()) CHECK(rearrangement_gap(lambda, w) > 0);
    }
  }
  CHECK_THROWS_AS(act(Permutation(2), R({1, 2, 3})), DomainError);
}

TEST_CASE("random regular dominant weights") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lambda = random_regular_dominant(1 + trial % 10, rng);
    CHECK(is_regular(lambda));
    CHECK(is_dominant(lambda));
  }
}
