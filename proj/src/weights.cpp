#include "gkmin/weights.hpp"

#include "gkmin/error.hpp"
#include "gkmin/tableau.hpp"

namespace gkmin {

bool is_integer(const Rational& x) { return x.get_den() == 1; }

namespace {

void check_block(const std::vector<Rational>& v, const char* name) {
  for (std::size_t s = 1; s < v.size(); ++s) {
    if (!is_integer(Rational(v[s] - v[0]))) {
      throw DomainError(std::string("weight block ") + name + " has a non-integral difference: " +
                        v[s].get_str() + " - " + v[0].get_str());
    }
  }
}

void check_regular_dominant(const WeightVector& lambda, const char* what) {
  if (!is_regular(lambda) || !is_dominant(lambda)) {
    throw DomainError(std::string(what) + ": weight " + lambda.to_string() + " is not regular dominant");
  }
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += v[k].get_str();
  }
  return out;
}

bool negative_integer(const Rational& x) { return is_integer(x) && x < 0; }

} // namespace

WeightVector::WeightVector(std::vector<Rational> a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size()) {
    throw DomainError("weight blocks must be nonempty and of equal length");
  }
  for (auto& x : a_) x.canonicalize();
  for (auto& x : b_) x.canonicalize();
  check_block(a_, "a");
  check_block(b_, "b");
}

WeightVector WeightVector::from_integers(const std::vector<long>& values) {
  if (values.size() % 2 != 0) throw DomainError("weight needs 2n coordinates");
  const std::size_t n = values.size() / 2;
  std::vector<Rational> a, b;
  for (std::size_t k = 0; k < n; ++k) {
    a.emplace_back(values[k]);
    b.emplace_back(values[n + k]);
  }
  return WeightVector(std::move(a), std::move(b));
}

std::string WeightVector::to_string() const { return "(" + join(a_) + "; " + join(b_) + ")"; }

bool is_regular(const WeightVector& lambda) {
  for (const auto* v : {&lambda.a(), &lambda.b()}) {
    for (std::size_t s = 0; s < v->size(); ++s) {
      for (std::size_t t = s + 1; t < v->size(); ++t) {
        if ((*v)[s] == (*v)[t]) return false;
      }
    }
  }
  return true;
}

bool is_dominant(const WeightVector& lambda) {
  for (const auto* v : {&lambda.a(), &lambda.b()}) {
    for (std::size_t s = 0; s < v->size(); ++s) {
      for (std::size_t t = s + 1; t < v->size(); ++t) {
        if (negative_integer(Rational((*v)[s] - (*v)[t]))) return false;
      }
    }
  }
  return true;
}

std::vector<Rational> act(const Permutation& w, std::span<const Rational> v) {
  if (static_cast<std::size_t>(w.degree()) != v.size()) throw DomainError("act: degree mismatch");
  const Permutation inv = w.inverse();
  std::vector<Rational> out(v.size());
  for (int k = 1; k <= w.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = v[static_cast<std::size_t>(inv(k) - 1)];
  return out;
}

Rational h_L(std::span<const Rational> nu) {
  const std::size_t m = nu.empty() ? 0 : nu.size() - 1;
  Rational prod = 1;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m; ++t) prod *= Rational(nu[s] - nu[t]) / Rational(static_cast<long>(t - s));
  }
  return prod;
}

Rational weyl_dim(std::span<const Rational> a, int i) {
  const int n = static_cast<int>(a.size());
  if (i < 1 || i > n) throw DomainError("weyl_dim: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  Rational prod = 1;
  for (int s = 1; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      if (s != i && t != i) prod *= a[static_cast<std::size_t>(s - 1)] - a[static_cast<std::size_t>(t - 1)];
    }
  }
  mpz_class superfactorial = 1, factorial = 1;
  for (int k = 1; k <= n - 2; ++k) {
    factorial *= k;
    superfactorial *= factorial;
  }
  return prod / Rational(superfactorial);
}

Rational goldie_eval(int i, std::span<const Rational> a) {
  const int n = static_cast<int>(a.size());
  if (i < 2 || i > n) throw DomainError("goldie_eval: index " + std::to_string(i) + " outside 2.." + std::to_string(n));
  Rational sum = 0;
  for (int j = i; j <= n; ++j) {
    if ((j - i) % 2 == 0) sum += weyl_dim(a, j);
    else sum -= weyl_dim(a, j);
  }
  return sum;
}

int y_chain_index(const Permutation& y) {
  const int n = y.degree();
  for (int i = 1; i <= n; ++i) {
    if (y_rep(i, n) == y) return i;
  }
  throw DomainError("y_chain_index: " + y.to_string() + " is not a maximal coset representative");
}

Rational bernstein_c(const Permutation& w, const WeightVector& lambda) {
  check_regular_dominant(lambda, "bernstein_c");
  const int n = lambda.degree();
  if (w.degree() != n) throw DomainError("bernstein_c: degree mismatch");
  if (!is_w_cycle(w)) throw DomainError("bernstein_c: " + w.to_string() + " is not a cycle w_{i,j} with i != j");
  const Permutation w0 = longest_element(n);
  const int left = y_chain_index(minimal_element(compose(w0, w.inverse())));
  const int right = y_chain_index(minimal_element(compose(w0, w)));
  return goldie_eval(left, lambda.a()) * goldie_eval(right, lambda.b());
}

Rational dim_F(int i, int j, const WeightVector& lambda) {
  check_regular_dominant(lambda, "dim_F");
  return weyl_dim(lambda.a(), i) * weyl_dim(lambda.b(), j);
}

WeightVector lambda_rearrange(const WeightVector& lambda, int i, int j) {
  const int n = lambda.degree();
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("lambda_rearrange: index out of range");
  auto move_to_end = [](std::vector<Rational> v, int k) {
    Rational moved = v[static_cast<std::size_t>(k - 1)];
    v.erase(v.begin() + (k - 1));
    v.push_back(std::move(moved));
    return v;
  };
  return WeightVector(move_to_end(lambda.a(), i), move_to_end(lambda.b(), j));
}

std::vector<Rational> extremal_weight(const WeightVector& lambda, const Permutation& w) {
  const auto wb = act(w, lambda.b());
  std::vector<Rational> out(wb.size());
  for (std::size_t k = 0; k < wb.size(); ++k) out[k] = lambda.a()[k] - wb[k];
  return out;
}

Rational rearrangement_gap(const WeightVector& lambda, const Permutation& w) {
  check_regular_dominant(lambda, "rearrangement_gap");
  const auto wb = act(w, lambda.b());
  Rational gap = 0;
  for (std::size_t k = 0; k < wb.size(); ++k) gap += lambda.a()[k] * (lambda.b()[k] - wb[k]);
  return gap;
}

WeightVector random_regular_dominant(int n, std::mt19937_64& rng, int max_gap) {
  std::uniform_int_distribution<long> gap(1, max_gap);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 6);
  Rational offset(num(rng), den(rng));
  offset.canonicalize();
  auto block = [&] {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    long x = num(rng);
    for (int k = n - 1; k >= 0; --k) {
      v[static_cast<std::size_t>(k)] = Rational(x) + offset;
      x += gap(rng);
    }
    return v;
  };
  auto a = block();
  auto b = block();
  return WeightVector(std::move(a), std::move(b));
}

} // namespace gkmin
