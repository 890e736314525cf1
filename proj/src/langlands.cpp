#include "gkmin/langlands.hpp"

#include <algorithm>

#include "gkmin/error.hpp"

namespace gkmin {

Character::Character(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (!is_integer(Rational(a_ - b_))) {
    throw DomainError("character (" + a_.get_str() + ", " + b_.get_str() + ") has a - b not integral");
  }
}

LanglandsParameter::LanglandsParameter(std::vector<Character> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Character& x, const Character& y) { return y < x; });
}

std::string LanglandsParameter::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ';';
    out += entries_[k].a().get_str() + ":" + entries_[k].b().get_str();
  }
  return out;
}

bool succ(const Rational& a, const Rational& b) {
  const Rational d = a - b;
  return is_integer(d) && d > 0;
}

bool is_totally_ordered(const std::vector<Character>& gamma) {
  // A chain a_1 > a_2 > ... forces the order of decreasing a.
  std::vector<Character> sorted = gamma;
  std::sort(sorted.begin(), sorted.end(), [](const Character& x, const Character& y) { return y.a() < x.a(); });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (!succ(sorted[k - 1].a(), sorted[k].a()) || !succ(sorted[k - 1].b(), sorted[k].b())) return false;
  }
  return true;
}

bool is_totally_ordered(const LanglandsParameter& gamma) { return is_totally_ordered(gamma.entries()); }

bool is_integral(const LanglandsParameter& gamma) {
  const auto& e = gamma.entries();
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (!is_integer(Rational(e[k].a() - e[0].a()))) return false;
  }
  return true;
}

std::string to_string(GkClass c) {
  switch (c) {
    case GkClass::Zero: return "Zero";
    case GkClass::Minimal: return "Minimal";
    case GkClass::Larger: return "Larger";
  }
  return "?";
}

std::optional<int> gk_dimension(GkClass c, int n) {
  switch (c) {
    case GkClass::Zero: return 0;
    case GkClass::Minimal: return 2 * n - 2;
    case GkClass::Larger: return std::nullopt;
  }
  return std::nullopt;
}

GkClass gk_dim_class(const LanglandsParameter& gamma) {
  const auto& e = gamma.entries();
  if (e.size() < 2) throw DomainError("gk_dim_class needs n >= 2");
  if (is_totally_ordered(e)) return GkClass::Zero;
  for (std::size_t drop = 0; drop < e.size(); ++drop) {
    // Dropping one copy of a repeated character gives the same submultiset.
    if (drop > 0 && e[drop] == e[drop - 1]) continue;
    std::vector<Character> rest;
    rest.reserve(e.size() - 1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k != drop) rest.push_back(e[k]);
    }
    if (is_totally_ordered(rest)) return GkClass::Minimal;
  }
  return GkClass::Larger;
}

LanglandsParameter parameter_from(const WeightVector& lambda, const Permutation& w) {
  if (w.degree() != lambda.degree()) throw DomainError("parameter_from: degree mismatch");
  const auto wb = act(w, lambda.b());
  std::vector<Character> entries;
  for (std::size_t k = 0; k < wb.size(); ++k) entries.emplace_back(lambda.a()[k], wb[k]);
  return LanglandsParameter(std::move(entries));
}

SingularPoint singular_point(int i, int j, int n) {
  if (n < 2) throw DomainError("singular_point needs n >= 2");
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("singular_point: index out of range");
  if (i == j) throw DomainError("singular_point needs i != j");
  const int i0 = i < j ? i : i - 1;
  const int j0 = i < j ? j - 1 : j;
  const Rational half(n, 2);
  auto block = [&](int doubled) {
    std::vector<Rational> v;
    for (int k = 1; k <= n - 1; ++k) {
      v.push_back(half - k);
      if (k == doubled) v.push_back(half - k);
    }
    return v;
  };
  std::vector<Character> chars;
  for (int k = 1; k <= n - 1; ++k) chars.emplace_back(half - k, half - k);
  chars.emplace_back(half - i0, half - j0);
  return {i0, j0, WeightVector(block(i0), block(j0)), LanglandsParameter(std::move(chars))};
}

} // namespace gkmin
