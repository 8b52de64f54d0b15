#include "strval/json_io.hpp"

#include "strval/errors.hpp"

namespace strval {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw DomainError("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Weight& w) { return w.coords; }
Json to_json(const StringParams& s) { return s.a; }
Json to_json(const ValVector& v) { return v.v; }
Json to_json(const GradedValue& v) { return {{"degree", v.degree}, {"value", v.tail.v}}; }
Json to_json(const LatticePoint& p) { return Json(p); }

Json to_json(const SparseMatrix& m) {
  Json out = Json::array();
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& [i, x] : m.col(j).entries()) out.push_back({i, j, to_string(x)});
  return out;
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return {{"vars", p.num_vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const int n = j.at("vars").get<int>();
    if (n < 0) throw DomainError("polynomial with a negative number of variables");
    MultiPoly p(n);
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<Exponent>();
      if (static_cast<int>(e.size()) != n) throw DomainError("term exponent length differs from \"vars\"");
      for (int x : e)
        if (x < 0) throw DomainError("negative exponent in polynomial");
      p.add_term(e, rational_from_json(t.at("coef")));
    }
    return p;
  });
}

namespace {

Json halfspaces(const std::vector<Halfspace>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back({{"normal", to_json(h.normal)}, {"rhs", to_string(h.rhs)}});
  return out;
}

std::vector<Halfspace> halfspaces_from(const Json& j) {
  std::vector<Halfspace> out;
  for (const auto& h : j) {
    Halfspace hs;
    for (const auto& x : h.at("normal")) hs.normal.push_back(rational_from_json(x));
    hs.rhs = rational_from_json(h.at("rhs"));
    out.push_back(std::move(hs));
  }
  return out;
}

}  // namespace

Json to_json(const RationalPolytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(to_json(v));
  return {{"ambient_dim", p.ambient_dim},
          {"dim", p.dim},
          {"vertices", verts},
          {"facets", halfspaces(p.facets)},
          {"equations", halfspaces(p.equations)}};
}

RationalPolytope polytope_from_json(const Json& j) {
  return guarded("polytope", [&] {
    RationalPolytope p;
    p.ambient_dim = j.at("ambient_dim").get<int>();
    p.dim = j.at("dim").get<int>();
    for (const auto& v : j.at("vertices")) {
      RationalVector x;
      for (const auto& c : v) x.push_back(rational_from_json(c));
      p.vertices.push_back(std::move(x));
    }
    p.facets = halfspaces_from(j.at("facets"));
    p.equations = halfspaces_from(j.value("equations", Json::array()));
    return p;
  });
}

Json to_json(const HWModule& m) {
  Json weights = Json::array();
  for (const auto& w : m.basis_weights) weights.push_back(to_json(w));
  Json e = Json::array(), f = Json::array();
  for (const auto& x : m.op_E) e.push_back(to_json(x));
  for (const auto& x : m.op_F) f.push_back(to_json(x));
  return {{"family", to_string(m.spec.family)},
          {"rank", m.spec.rank},
          {"lambda", to_json(m.lambda)},
          {"dim", m.dim()},
          {"highest_weight_index", m.hw_index},
          {"basis_weights", weights},
          {"E", e},
          {"F", f}};
}

Json to_json(const SubductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"exponents", s.exponents}, {"scalar", to_string(s.scalar)}, {"value", to_json(s.value)}});
  Json out = {{"steps", steps},
              {"status", to_string(t.status)},
              {"remainder_zero", t.remainder.poly.is_zero()},
              {"remainder", to_json(t.remainder.poly)}};
  out["witness"] = t.witness ? to_json(*t.witness) : Json(nullptr);
  return out;
}

Json to_json(const MultiplicationTable& t) {
  Json basis = Json::array();
  for (const auto& [k, p] : t.basis) basis.push_back({{"level", k}, {"point", p}});
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json prod = Json::array();
    for (const auto& [k, c] : e.product) prod.push_back({k, to_string(c)});
    entries.push_back({{"left", e.left}, {"right", e.right}, {"product", prod}});
  }
  return {{"basis", basis}, {"entries", entries}};
}

Json to_json(const ValueSemigroup& s) {
  Json levels = Json::array();
  for (const auto& [k, pts] : s.levels) levels.push_back({{"level", k}, {"points", Json(pts)}});
  return {{"dim", s.dim}, {"levels", levels}};
}

Json to_json(const IsotypicData& d) {
  Json entries = Json::array();
  for (const auto& [key, m] : d.multiplicity)
    entries.push_back({{"level", key.first}, {"weight", to_json(key.second)}, {"multiplicity", m}});
  Json moment = Json::array();
  for (const auto& v : d.moment_vertices) moment.push_back(to_json(v));
  return {{"family", to_string(d.spec.family)},
          {"rank", d.spec.rank},
          {"name", d.name},
          {"entries", entries},
          {"moment_vertices", moment}};
}

IsotypicData isotypic_from_json(const Json& j) {
  return guarded("isotypic data", [&] {
    IsotypicData d;
    d.spec = root_system(parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>());
    d.name = j.value("name", std::string("custom"));
    for (const auto& e : j.at("entries")) {
      Weight w{e.at("weight").get<std::vector<int>>()};
      validate_weight(d.spec, w);
      d.multiplicity[{e.at("level").get<int>(), w}] = e.value("multiplicity", 1);
    }
    for (const auto& v : j.value("moment_vertices", Json::array())) {
      RationalVector x;
      for (const auto& c : v) x.push_back(rational_from_json(c));
      if (static_cast<int>(x.size()) != d.spec.rank) throw DomainError("moment vertex has wrong dimension");
      d.moment_vertices.push_back(std::move(x));
    }
    auto problems = d.violations();
    if (!problems.empty()) throw DomainError("invalid isotypic data: " + problems.front());
    return d;
  });
}

}  // namespace strval
