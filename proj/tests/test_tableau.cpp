#include <doctest.h>

#include <algorithm>
#include <set>

#include "gkmin/error.hpp"
#include "gkmin/tableau.hpp"

using namespace gkmin;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// Longest increasing / decreasing subsequence lengths (first row and first
// column of the RS shape), by quadratic DP.
int longest_monotone(const Permutation& w, bool increasing) {
  const int n = w.degree();
  std::vector<int> best(static_cast<std::size_t>(n), 1);
  int top = 0;
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < k; ++s) {
      const bool ok = increasing ? w(s + 1) < w(k + 1) : w(s + 1) > w(k + 1);
      if (ok) best[static_cast<std::size_t>(k)] = std::max(best[static_cast<std::size_t>(k)], best[static_cast<std::size_t>(s)] + 1);
    }
    top = std::max(top, best[static_cast<std::size_t>(k)]);
  }
  return top;
}

int second_column_entry(const StandardTableau& t) { return t.column(2).at(0); }

} // namespace

TEST_CASE("partitions and tableaux validate") {
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK(Partition().size() == 0);
  CHECK(Partition({3, 2}).to_string() == "[3,2]");
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
  CHECK_THROWS_AS(StandardTableau({{1, 3}, {3}}), DomainError);
  CHECK_THROWS_AS(StandardTableau({{2, 1}}), DomainError);
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {3, 4, 5}}), DomainError);
  CHECK_THROWS_AS(StandardTableau({{1, 3}, {4}}), DomainError);
  CHECK(StandardTableau({{1, 3}, {2}}).to_string() == "[[1,3],[2]]");
  CHECK(two_column_shape(2) == Partition({2}));
  CHECK(two_column_shape(4) == Partition({2, 1, 1}));
}

TEST_CASE("rs examples") {
  const auto id = rs(Permutation(5));
  CHECK(id.insertion == StandardTableau({{1, 2, 3, 4, 5}}));
  CHECK(id.recording == StandardTableau({{1, 2, 3, 4, 5}}));
  const auto pq = rs(P({2, 3, 1}));
  CHECK(pq.insertion == StandardTableau({{1, 3}, {2}}));
  CHECK(pq.recording == StandardTableau({{1, 2}, {3}}));
  const auto t = rs(compose(longest_element(3), w_cycle(1, 2, 3)));
  CHECK(second_column_entry(t.insertion) == 3);
  CHECK(second_column_entry(t.recording) == 2);
}

TEST_CASE("rs_inverse examples") {
  const StandardTableau column({{1}, {2}, {3}, {4}});
  CHECK(rs_inverse(column, column) == longest_element(4));
  for (const auto& w : all_permutations(5)) {
    const auto p = rs(w).insertion;
    const Permutation inv = rs_inverse(p, p);
    CHECK(inv == inv.inverse());
  }
  CHECK_THROWS_AS(rs_inverse(StandardTableau({{1, 2}}), StandardTableau({{1}, {2}})), DomainError);
}

TEST_CASE("rs is a bijection with Q(w) = P(w^-1), exhaustive n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<StandardTableau, StandardTableau>> seen;
    for (const auto& w : all_permutations(n)) {
      const auto pq = rs(w);
      CHECK(pq.insertion.shape() == pq.recording.shape());
      CHECK(rs_inverse(pq.insertion, pq.recording) == w);
      CHECK(rs(w.inverse()).insertion == pq.recording);
      CHECK(pq.insertion.shape().part(1) == longest_monotone(w, true));
      CHECK(pq.insertion.shape().rows() == longest_monotone(w, false));
      seen.emplace(pq.insertion, pq.recording);
    }
    CHECK(seen.size() == all_permutations(n).size());
  }
}

TEST_CASE("cell equivalences") {
  const Permutation w = P({3, 1, 4, 2});
  CHECK(left_cell_equiv(w, w));
  const Permutation w0 = longest_element(3);
  CHECK(left_cell_equiv(compose(w0, w_cycle(1, 3, 3)), compose(w0, w_cycle(2, 3, 3))));
  const auto all = all_permutations(4);
  for (const auto& x : all) {
    for (const auto& y : all) CHECK(right_cell_equiv(x, y) == left_cell_equiv(x.inverse(), y.inverse()));
  }
  CHECK_THROWS_AS(left_cell_equiv(P({1, 2}), P({1, 2, 3})), DomainError);
}

TEST_CASE("two-column cell") {
  CHECK(two_column_cell(2) == std::vector<Permutation>{Permutation(2)});
  CHECK(two_column_cell(3).size() == 4);
  for (int n = 2; n <= 7; ++n) {
    const auto cell = two_column_cell(n);
    CHECK(cell.size() == static_cast<std::size_t>((n - 1) * (n - 1)));
    const Permutation w0 = longest_element(n);
    std::set<Permutation> left_form(cell.begin(), cell.end()), right_form;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) right_form.insert(compose(w0, w_cycle(i, j, n)));
      }
    }
    CHECK(left_form == right_form);
    std::set<StandardTableau> left_cells;
    std::size_t shape_count = 0;
    for (const auto& w : all_permutations(n)) {
      const bool by_shape = longest_monotone(w, true) <= 2 && longest_monotone(w, false) == n - 1 &&
                            (n > 2 || w.is_identity());
      CHECK(in_two_column_cell(w) == left_form.contains(w));
      if (n > 2) CHECK(in_two_column_cell(w) == by_shape);
      if (in_two_column_cell(w)) {
        ++shape_count;
        left_cells.insert(rs(w).recording);
      }
    }
    CHECK(shape_count == cell.size());
    CHECK(left_cells.size() == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("tableaux of w0 w_{i,j}") {
  for (int n = 2; n <= 7; ++n) {
    const Permutation w0 = longest_element(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const auto pq = rs(compose(w0, w_cycle(i, j, n)));
        REQUIRE(pq.insertion.shape() == two_column_shape(n));
        CHECK(second_column_entry(pq.insertion) == (i < j ? n + 1 - i : n + 2 - i));
        CHECK(second_column_entry(pq.recording) == (i < j ? j : j + 1));
      }
    }
  }
}

TEST_CASE("minimal elements") {
  const Permutation w0 = longest_element(3);
  CHECK(minimal_element(compose(w0, w_cycle(1, 2, 3))) == y_rep(2, 3));
  CHECK(minimal_element(compose(w0, w_cycle(3, 1, 3))) == y_rep(2, 3));
  CHECK(canonical_two_column_tableau(4) == StandardTableau({{1, 4}, {2}, {3}}));
  for (int n = 2; n <= 7; ++n) {
    const Permutation w0n = longest_element(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) CHECK(minimal_element(compose(w0n, w_cycle(i, j, n))) == y_rep(i < j ? j : j + 1, n));
      }
    }
    for (int i = 2; i <= n; ++i) {
      for (int j = 2; j <= n; ++j) CHECK(minimal_element(compose(w0n, v_cycle(i, j, n))) == y_rep(j, n));
    }
    std::set<Permutation> cmin;
    for (const auto& w : two_column_cell(n)) {
      if (rs(w).insertion == canonical_two_column_tableau(n)) cmin.insert(w);
    }
    std::set<Permutation> ys;
    for (int i = 2; i <= n; ++i) ys.insert(y_rep(i, n));
    CHECK(cmin == ys);
  }
  CHECK_THROWS_AS(minimal_element(Permutation(3)), DomainError);
}
