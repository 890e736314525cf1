#include "gkmin/json_io.hpp"

namespace gkmin {

Json to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return x.get_str();
}

Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const Permutation& w) { return Json(std::vector<int>(w.images().begin(), w.images().end())); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const StandardTableau& t) { return Json(t.rows()); }

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SkewPartition& s) {
  Json out;
  out["outer"] = to_json(s.outer());
  out["inner"] = to_json(s.inner());
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const WeightVector& lambda) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : lambda.a()) a.push_back(to_json(x));
  for (const auto& x : lambda.b()) b.push_back(to_json(x));
  Json out;
  out["a"] = std::move(a);
  out["b"] = std::move(b);
  return out;
}

Json to_json(const LanglandsParameter& gamma) {
  Json out = Json::array();
  for (const auto& c : gamma.entries()) out.push_back(Json::array({to_json(c.a()), to_json(c.b())}));
  return out;
}

Json to_json(const CoherentVector& v) {
  Json coords = Json::array();
  mpz_class triv = 0;
  for (const auto& [label, c] : v.coords()) {
    if (label.triv) {
      triv = c;
      continue;
    }
    Json entry;
    entry["k"] = label.k;
    entry["l"] = label.l;
    entry["c"] = to_json(c);
    coords.push_back(std::move(entry));
  }
  Json out;
  out["n"] = v.degree();
  out["coords"] = std::move(coords);
  out["triv"] = to_json(triv);
  return out;
}

Json to_json(const Constituent& c) {
  Json out;
  out["constituent"] = c.name;
  if (c.k != 0) {
    out["k"] = c.k;
    out["l"] = c.l;
  }
  out["parameter"] = to_json(c.parameter);
  out["multiplicity"] = to_json(c.multiplicity);
  out["gk_class"] = to_string(c.gk_class);
  return out;
}

} // namespace gkmin
