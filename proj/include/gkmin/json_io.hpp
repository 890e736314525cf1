#pragma once

#include <json.hpp>

#include "gkmin/coherent.hpp"
#include "gkmin/dyck.hpp"
#include "gkmin/int_matrix.hpp"
#include "gkmin/langlands.hpp"
#include "gkmin/permutation.hpp"
#include "gkmin/qpoly.hpp"
#include "gkmin/tableau.hpp"
#include "gkmin/weights.hpp"

namespace gkmin {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in a signed 64-bit
// value and as decimal strings otherwise. Rationals are always strings.

Json to_json(const mpz_class& x);
Json to_json(const Rational& x);
Json to_json(const Permutation& w);
Json to_json(const Partition& p);
Json to_json(const StandardTableau& t);
/// Ascending coefficient list.
Json to_json(const QPoly& p);
Json to_json(const SkewPartition& s);
/// Row-major array of rows.
Json to_json(const IntMatrix& m);
Json to_json(const WeightVector& lambda);
/// Array of ["a", "b"] pairs in stored order.
Json to_json(const LanglandsParameter& gamma);
Json to_json(const CoherentVector& v);
Json to_json(const Constituent& c);

} // namespace gkmin
