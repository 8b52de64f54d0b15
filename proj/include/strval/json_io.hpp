#pragma once

#include "strval/hwmodule.hpp"
#include "strval/nok.hpp"
#include "strval/poly.hpp"
#include "strval/polytope.hpp"
#include "strval/sagbi.hpp"
#include "strval/strings.hpp"

#include <json.hpp>

namespace strval {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const Weight& w);
Json to_json(const StringParams& s);
Json to_json(const ValVector& v);
Json to_json(const GradedValue& v);
Json to_json(const LatticePoint& p);
Json to_json(const SparseMatrix& m);

/// {"vars": N, "terms": [{"exp": [...], "coef": "p/q"}, ...]}
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// {"ambient_dim", "dim", "vertices", "facets": [{"normal", "rhs"}], "equations": [...]}
Json to_json(const RationalPolytope& p);
RationalPolytope polytope_from_json(const Json& j);

Json to_json(const HWModule& m);
Json to_json(const SubductionTrace& t);
Json to_json(const MultiplicationTable& t);
Json to_json(const ValueSemigroup& s);

/// {"family", "rank", "name", "entries": [{"level", "weight", "multiplicity"}], "moment_vertices"}
Json to_json(const IsotypicData& d);
IsotypicData isotypic_from_json(const Json& j);

}  // namespace strval
