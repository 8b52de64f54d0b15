#include "strval/commands.hpp"

#include "strval/bott_samelson.hpp"
#include "strval/errors.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace strval {

const char* version() { return STRVAL_VERSION; }

namespace {

template <class T>
T field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw UsageError(std::string("config key \"") + key + "\" has the wrong type: " + j.at(key).dump());
  }
}

}  // namespace

RunConfig parse_config(const Json& j) {
  if (j.is_null()) return {};
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (value.is_null() && (key == "word" || key == "lambda" || key == "mu" || key == "poly" || key == "generators"))
      continue;
    if (key == "family") c.family = field<std::string>(j, "family");
    else if (key == "rank") c.rank = field<int>(j, "rank");
    else if (key == "word") c.word = field<std::vector<int>>(j, "word");
    else if (key == "lambda") c.lambda = field<std::vector<int>>(j, "lambda");
    else if (key == "mu") c.mu = field<std::vector<int>>(j, "mu");
    else if (key == "data") c.data = field<std::string>(j, "data");
    else if (key == "level_cap") c.level_cap = field<int>(j, "level_cap");
    else if (key == "scaling") c.scaling = field<int>(j, "scaling");
    else if (key == "random") c.random = field<int>(j, "random");
    else if (key == "seed") c.seed = field<std::uint64_t>(j, "seed");
    else if (key == "format") c.format = field<std::string>(j, "format");
    else if (key == "dimension_cap") c.dimension_cap = field<std::int64_t>(j, "dimension_cap");
    else if (key == "samples") c.samples = field<int>(j, "samples");
    else if (key == "levels") c.levels = field<int>(j, "levels");
    else if (key == "step_cap") c.step_cap = field<int>(j, "step_cap");
    else if (key == "valuation") c.valuation = field<std::string>(j, "valuation");
    else if (key == "order") c.order = field<std::vector<int>>(j, "order");
    else if (key == "poly") c.poly = value;
    else if (key == "generators") c.generators = value;
    else throw UsageError("unknown config key \"" + key + "\"");
  }
  if (c.format != "json" && c.format != "csv" && c.format != "table")
    throw UsageError("format must be json, csv or table");
  if (c.valuation != "highest" && c.valuation != "lowest") throw UsageError("valuation must be highest or lowest");
  if (c.level_cap < 1) throw UsageError("level_cap must be at least 1");
  if (c.random < 0 || c.samples < 0 || c.levels < 1 || c.step_cap < 1 || c.scaling < 1 || c.dimension_cap < 1)
    throw UsageError("counts and caps must be positive");
  return c;
}

Json to_json(const RunConfig& c) {
  Json j = {{"family", c.family},       {"rank", c.rank},       {"level_cap", c.level_cap},
            {"scaling", c.scaling},     {"random", c.random},   {"seed", c.seed},
            {"format", c.format},       {"samples", c.samples}, {"dimension_cap", c.dimension_cap},
            {"levels", c.levels},       {"step_cap", c.step_cap}, {"valuation", c.valuation},
            {"order", c.order},         {"data", c.data}};
  j["word"] = c.word ? Json(*c.word) : Json(nullptr);
  j["lambda"] = c.lambda ? Json(*c.lambda) : Json(nullptr);
  j["mu"] = c.mu ? Json(*c.mu) : Json(nullptr);
  j["poly"] = c.poly;
  j["generators"] = c.generators;
  return j;
}

namespace {

struct Outcome {
  Json result;
  bool passed = true;
};

/// Validated view of a RunConfig; every accessor raises UsageError on invalid input.
class Context {
 public:
  explicit Context(const RunConfig& c) : config(c) {}

  const RunConfig& config;

  RootSystemSpec spec() const {
    try {
      return root_system(parse_family(config.family), config.rank);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  Weight weight(const std::optional<std::vector<int>>& coords, const char* name) const {
    if (!coords) throw UsageError(std::string("missing --") + name);
    Weight w{*coords};
    try {
      validate_weight(spec(), w);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!w.dominant()) throw UsageError(std::string(name) + " " + to_string(w) + " is not dominant");
    return w;
  }
  Weight lambda() const { return weight(config.lambda, "lambda"); }
  Weight mu() const { return weight(config.mu, "mu"); }

  /// The configured word, or every reduced word of w0 when none is given.
  std::vector<WeylWord> words() const {
    const auto s = spec();
    if (!config.word) return longest_element_words(s);
    WeylWord w{*config.word};
    try {
      validate_word(s, w);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!is_reduced(s, w) || weyl_length(s, w) != s.num_positive_roots)
      throw UsageError("word " + to_string(w) + " is not a reduced word for w0");
    return {w};
  }
  WeylWord word() const { return words().front(); }

  IsotypicData data() const {
    if (config.data.empty() || config.data == "builtin:a1-toy") return a1_toy_datum(config.level_cap);
    if (config.data == "builtin:flag") return flag_datum(spec(), lambda(), config.level_cap);
    std::ifstream in(config.data);
    if (!in) throw UsageError("cannot read isotypic data file " + config.data);
    try {
      return isotypic_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
      throw UsageError(std::string("invalid JSON in ") + config.data + ": " + e.what());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  ValuedAlgebra algebra() const {
    return {config.valuation == "highest" ? TermValuation::Highest : TermValuation::Lowest, config.order, false};
  }

  MultiPoly poly(const Json& j, const char* name) const {
    if (j.is_null()) throw UsageError(std::string("missing --") + name);
    try {
      auto p = poly_from_json(j);
      if (!config.order.empty()) check_order(p.num_vars());
      return p;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

 private:
  void check_order(int n) const {
    std::vector<int> sorted = config.order;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
      if (sorted[k] != k || static_cast<int>(sorted.size()) != n)
        throw UsageError("order must be a permutation of 0.." + std::to_string(n - 1));
  }
};

Json positive_roots_json(const RootSystemSpec& s) {
  Json out = Json::array();
  for (const auto& c : positive_coroots(s)) out.push_back(c);
  return out;
}

Outcome cmd_roots(const Context& ctx) {
  const auto s = ctx.spec();
  Outcome o;
  Json simple = Json::array(), fundamental = Json::array(), words = Json::array();
  for (int i = 1; i <= s.rank; ++i) {
    simple.push_back(to_json(simple_root(s, i)));
    fundamental.push_back(to_json(fundamental_weight(s, i)));
  }
  for (const auto& w : longest_element_words(s)) {
    words.push_back(w.indices);
    o.passed = o.passed && is_reduced(s, w) && weyl_length(s, w) == s.num_positive_roots;
  }
  o.result = {{"cartan", s.cartan},
              {"num_positive_roots", s.num_positive_roots},
              {"simple_roots", simple},
              {"fundamental_weights", fundamental},
              {"positive_coroots", positive_roots_json(s)},
              {"longest_words", words}};
  return o;
}

Outcome cmd_module(const Context& ctx) {
  const auto s = ctx.spec();
  const auto lambda = ctx.lambda();
  auto m = build_hw_module(s, lambda, ctx.config.dimension_cap);
  auto violations = m.as_rep().relation_violations();
  Outcome o;
  o.result = to_json(m);
  o.result["weyl_dim"] = weyl_dim(s, lambda);
  o.result["relation_violations"] = violations;
  o.passed = violations.empty() && m.dim() == weyl_dim(s, lambda);
  return o;
}

Json points_json(const std::set<StringParams>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p.a);
  return out;
}

Outcome cmd_value_set(const Context& ctx) {
  const auto s = ctx.spec();
  const auto lambda = ctx.lambda();
  auto m = build_hw_module(s, lambda, ctx.config.dimension_cap);
  Outcome o;
  o.result = Json::array();
  for (const auto& w : ctx.words()) {
    auto vs = value_set(m, w);
    const bool ok = static_cast<std::int64_t>(vs.points.size()) == weyl_dim(s, lambda);
    o.passed = o.passed && ok;
    o.result.push_back({{"word", w.indices}, {"points", points_json(vs.points)}, {"count", vs.points.size()},
                        {"weyl_dim", weyl_dim(s, lambda)}});
  }
  return o;
}

Outcome cmd_oracle(const Context& ctx) {
  const auto s = ctx.spec();
  if (s.family != Family::A) throw UsageError("the tableaux oracle exists for type A only");
  const auto lambda = ctx.lambda();
  auto m = build_hw_module(s, lambda, ctx.config.dimension_cap);
  auto tableaux = semistandard_tableaux(s, lambda);
  Outcome o;
  o.result = Json::array();
  for (const auto& w : ctx.words()) {
    std::set<StringParams> crystal;
    for (const auto& t : tableaux) crystal.insert(tableaux_string_params(s, lambda, t, w));
    auto lie = value_set(m, w).points;
    const bool ok = crystal == lie && crystal.size() == tableaux.size();
    o.passed = o.passed && ok;
    o.result.push_back({{"word", w.indices}, {"tableaux", tableaux.size()}, {"crystal", points_json(crystal)},
                        {"lie", points_json(lie)}, {"equal", ok}});
  }
  return o;
}

Outcome cmd_cone(const Context& ctx) {
  const auto s = ctx.spec();
  Outcome o;
  o.result = Json::array();
  for (const auto& w : ctx.words()) {
    auto sample = string_cone_sample(s, w, ctx.config.level_cap, ctx.config.dimension_cap);
    std::map<Weight, std::set<StringParams>> by_weight;
    for (const auto& [lambda, a] : sample) by_weight[lambda].insert(a);
    Json slices = Json::array();
    for (const auto& [lambda, pts] : by_weight) {
      const bool ok = static_cast<std::int64_t>(pts.size()) == weyl_dim(s, lambda);
      o.passed = o.passed && ok;
      slices.push_back({{"lambda", to_json(lambda)}, {"points", points_json(pts)}});
    }
    o.result.push_back({{"word", w.indices}, {"slices", slices}});
  }
  return o;
}

Outcome cmd_poly_valuation(const Context& ctx) {
  auto p = ctx.poly(ctx.config.poly, "poly");
  if (p.is_zero()) throw UsageError("the valuation of the zero polynomial is undefined");
  ValVector v = ctx.config.valuation == "highest" ? highest_term_valuation(p, ctx.config.order)
                                                  : lowest_term_valuation(p, ctx.config.order);
  Outcome o;
  o.result = {{"poly", to_json(p)}, {"text", to_string(p)}, {"value", to_json(v)}};
  return o;
}

Outcome cmd_poly_axioms(const Context& ctx) {
  std::mt19937_64 rng(ctx.config.seed);
  std::vector<MultiPoly> samples;
  for (int k = 0; k < ctx.config.samples; ++k) {
    MultiPoly p(3);
    while (p.is_zero()) p = random_poly(rng, 3, 4, 3);
    samples.push_back(std::move(p));
  }
  auto report = [&](const PolyValuation& v, bool multiplicative) {
    auto r = check_prevaluation_axioms(samples, v, ctx.config.seed, multiplicative);
    return std::make_pair(r, Json{{"pairs_checked", r.pairs_checked},
                                  {"combinations_checked", r.combinations_checked},
                                  {"violations", r.violations.size()},
                                  {"first_violation", r.violations.empty() ? "" : r.violations.front()}});
  };
  auto [high, high_json] = report([](const MultiPoly& f) { return highest_term_valuation(f); }, true);
  auto [low, low_json] = report([](const MultiPoly& f) { return lowest_term_valuation(f); }, true);
  // Number of terms: not a valuation.
  auto [control, control_json] =
      report([](const MultiPoly& f) { return ValVector{{static_cast<long>(f.num_terms())}}; }, true);
  Outcome o;
  o.result = {{"samples", samples.size()}, {"highest", high_json}, {"lowest", low_json},
              {"negative_control", control_json}, {"negative_control_flagged", !control.ok()}};
  o.passed = high.ok() && low.ok() && !control.ok();
  return o;
}

Outcome cmd_main_theorem(const Context& ctx) {
  const auto s = ctx.spec();
  const auto lambda = ctx.lambda();
  auto m = build_hw_module(s, lambda, ctx.config.dimension_cap);
  std::mt19937_64 rng(ctx.config.seed);
  Outcome o;
  Json words = Json::array();
  std::size_t matched = 0, total = 0;
  for (const auto& w : ctx.words()) {
    auto orbit = chart_orbit(m, w);
    Json pairs = Json::array();
    auto check = [&](const DualVector& sigma, const std::string& label) {
      auto c = verify_main_theorem(m, w, sigma, orbit);
      ++total;
      if (c.match()) ++matched;
      o.passed = o.passed && c.match();
      pairs.push_back({{"sigma", label}, {"string", to_json(c.string_side)}, {"valuation", to_json(c.valuation_side)},
                       {"match", c.match()}});
    };
    for (int j = 0; j < m.dim(); ++j) check(dual_basis_vector(m, j), "basis " + std::to_string(j));
    for (int r = 0; r < ctx.config.random; ++r) {
      DualVector sigma{RationalVector(m.dim())};
      while (sigma.is_zero())
        for (auto& x : sigma.coords) x = random_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 5, 4);
      check(sigma, "random " + std::to_string(r));
    }
    words.push_back({{"word", w.indices}, {"pairs", pairs}});
  }
  o.result = {{"dim", m.dim()}, {"words", words}, {"matched", matched}, {"checked", total}};
  return o;
}

Outcome cmd_expand(const Context& ctx) {
  const auto s = ctx.spec();
  const auto lambda = ctx.lambda();
  const auto mu = ctx.mu();
  auto ml = build_hw_module(s, lambda, ctx.config.dimension_cap);
  auto mm = build_hw_module(s, mu, ctx.config.dimension_cap);
  auto ms = build_hw_module(s, lambda + mu, ctx.config.dimension_cap);
  Outcome o;
  o.result = Json::array();
  for (const auto& w : ctx.words()) {
    auto basis_sum = section_basis(ms, w);
    auto left = value_set(ml, w);
    auto right = value_set(mm, w);
    Json products = Json::array();
    for (const auto& sigma : left.representatives) {
      for (const auto& tau : right.representatives) {
        auto e = expand_product(ml, mm, basis_sum, w, sigma, tau);
        o.passed = o.passed && e.ok();
        Json terms = Json::array();
        for (const auto& t : e.terms)
          terms.push_back({{"index", t.basis_index}, {"value", to_json(t.value)}, {"coef", to_string(t.coefficient)}});
        products.push_back({{"expected_leading", to_json(e.expected_leading)}, {"terms", terms}, {"ok", e.ok()}});
      }
    }
    o.result.push_back({{"word", w.indices}, {"products", products}, {"count", products.size()}});
  }
  return o;
}

Json polytope_report(const RationalPolytope& p) {
  Json j = to_json(p);
  auto vol = volume(p);
  j["volume"] = to_string(vol.volume);
  j["lattice_count"] = lattice_count(p, 1);
  return j;
}

Outcome cmd_string_polytope(const Context& ctx) {
  const auto s = ctx.spec();
  const auto lambda = ctx.lambda();
  const int cap = ctx.config.level_cap;
  Outcome o;
  o.result = Json::array();
  for (const auto& w : ctx.words()) {
    auto semigroup = string_semigroup(s, w, lambda, cap, ctx.config.dimension_cap);
    auto body = nok_body(semigroup, cap);
    auto gaps = cone_gaps(semigroup, body.body);
    Json j = polytope_report(body.body);
    j["word"] = w.indices;
    j["stabilized"] = body.stabilized;
    j["weyl_dim"] = weyl_dim(s, lambda);
    j["cone_gaps"] = gaps.size();
    bool ok = j["lattice_count"].get<std::int64_t>() == weyl_dim(s, lambda) && gaps.empty();
    // Delta(k lambda) at level c has lattice-polytope hull c k Delta when the vertex denominators divide c k
    long denom = 1;
    for (const auto& v : body.body.vertices)
      for (const auto& x : v) denom = std::lcm(denom, denominator(x).convert_to<long>());
    Json scaling = Json::array();
    for (int k = 2; k <= ctx.config.scaling; ++k) {
      const int level = static_cast<int>(denom / std::gcd(denom, static_cast<long>(k)));
      auto scaled = string_polytope(s, w, k * lambda, level, ctx.config.dimension_cap).body;
      const bool same = scaled == body.body.scaled(k);
      const bool count = lattice_count(body.body, k) == static_cast<std::uint64_t>(weyl_dim(s, k * lambda));
      ok = ok && same && count;
      scaling.push_back({{"k", k}, {"hull_equals_scaled", same}, {"lattice_count_matches", count}});
    }
    j["scaling"] = scaling;
    o.passed = o.passed && ok;
    o.result.push_back(j);
  }
  return o;
}

Outcome cmd_degree(const Context& ctx) {
  const auto s = ctx.spec();
  const auto lambda = ctx.lambda();
  const auto w = ctx.word();
  auto body = string_polytope(s, w, lambda, ctx.config.level_cap, ctx.config.dimension_cap);
  std::vector<BigInt> hilbert;
  for (int k = 0; k < ctx.config.levels; ++k) hilbert.emplace_back(weyl_dim(s, k * lambda));
  auto r = degree_check(hilbert, body.body);
  Json h = Json::array();
  for (const auto& x : hilbert) h.push_back(x.str());
  Outcome o;
  o.result = {{"word", w.indices},
              {"q", r.q},
              {"hilbert", h},
              {"leading_coefficient", to_string(r.leading_coefficient)},
              {"degree_from_hilbert", to_string(r.degree_from_hilbert)},
              {"volume", to_string(r.volume)},
              {"degree_from_volume", to_string(r.degree_from_volume)},
              {"match", r.match()}};
  o.passed = r.match();
  return o;
}

Outcome cmd_moment(const Context& ctx) {
  auto data = ctx.data();
  const int cap = ctx.config.level_cap;
  auto direct = moment_body(data, cap);
  auto via = nok_body(weight_semigroup(data, cap), cap);
  Outcome o;
  o.result = {{"data", data.name}, {"moment_body", to_json(direct)}, {"via_weight_valuation", to_json(via.body)},
              {"stabilized", via.stabilized}, {"agree", direct == via.body}};
  o.passed = direct == via.body;
  return o;
}

Outcome cmd_fibered(const Context& ctx) {
  auto data = ctx.data();
  const int cap = ctx.config.level_cap;
  WeylWord w;
  if (ctx.config.word) {
    RunConfig copy = ctx.config;
    copy.family = to_string(data.spec.family);
    copy.rank = data.spec.rank;
    w = Context(copy).word();
  } else {
    w = longest_element_words(data.spec).front();
  }
  auto p = fibered_polytope(data, w, cap, ctx.config.dimension_cap);
  Outcome o;
  o.result = polytope_report(p);
  o.result["data"] = data.name;
  o.result["word"] = w.indices;
  Json levels = Json::array();
  for (int k = 0; k <= cap; ++k) {
    const auto count = lattice_count(p, k);
    const auto expected = isotypic_dimension(data, k);
    o.passed = o.passed && count == expected;
    levels.push_back({{"k", k}, {"lattice_count", count}, {"sum_weyl_dim", expected}});
  }
  o.result["levels"] = levels;
  return o;
}

std::vector<AlgebraElement> generators_from(const Context& ctx) {
  const Json& g = ctx.config.generators;
  if (!g.is_array()) throw UsageError("generators must be a JSON array of polynomials");
  std::vector<AlgebraElement> out;
  for (const auto& p : g) out.push_back({0, ctx.poly(p, "generators")});
  return out;
}

Outcome cmd_subduct(const Context& ctx) {
  auto alg = ctx.algebra();
  AlgebraElement h{0, ctx.poly(ctx.config.poly, "poly")};
  auto gens = generators_from(ctx);
  for (const auto& g : gens) {
    if (g.poly.num_vars() != h.poly.num_vars()) throw UsageError("generators and poly use different variable counts");
    if (g.poly.is_zero()) throw UsageError("zero generator");
  }
  SubductionTrace trace;
  try {
    trace = subduct(alg, h, gens, ctx.config.step_cap);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const bool replayed = replay(trace, gens, h.poly.num_vars()) == h;
  Outcome o;
  o.result = to_json(trace);
  o.result["replay_reconstructs"] = replayed;
  o.passed = replayed;
  return o;
}

Outcome cmd_sagbi_check(const Context& ctx) {
  const auto s = ctx.spec();
  const auto w = ctx.word();
  auto sample = section_ring_sample(s, w, ctx.lambda(), ctx.config.level_cap, ctx.config.dimension_cap);
  std::vector<AlgebraElement> all;
  for (const auto& level : sample.spanning) all.insert(all.end(), level.begin(), level.end());
  auto report = is_sagbi(sample.algebra, sample.basis[1], all);
  std::size_t reconstructed = 0;
  const int n = static_cast<int>(w.size());
  for (const auto& f : all) {
    auto trace = subduct(sample.algebra, f, sample.basis[1]);
    if (trace.complete() && replay(trace, sample.basis[1], n) == f) ++reconstructed;
  }
  Outcome o;
  o.result = {{"word", w.indices},
              {"generators", sample.basis[1].size()},
              {"values_checked", report.values_checked},
              {"elements_subducted", report.elements_subducted},
              {"reconstructed", reconstructed},
              {"spanning_elements", all.size()},
              {"is_sagbi", report.ok()},
              {"reason", report.reason}};
  o.result["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  o.passed = report.ok() && reconstructed == all.size();
  return o;
}

Outcome cmd_degenerate(const Context& ctx) {
  const auto s = ctx.spec();
  const auto w = ctx.word();
  auto sample = section_ring_sample(s, w, ctx.lambda(), ctx.config.level_cap, ctx.config.dimension_cap);
  auto family = degeneration_family(sample.algebra, sample.basis);
  auto table = semigroup_algebra(basis_semigroup(sample.algebra, sample.basis));
  Json products = Json::array();
  bool nonzero = true;
  for (const auto& p : family.products) {
    Json terms = Json::array();
    for (const auto& t : p.terms) {
      terms.push_back({{"index", t.basis_index}, {"coef", to_string(t.coefficient)}, {"gap", to_json(t.gap)}});
    }
    nonzero = nonzero && p.terms.front().coefficient != 0;
    products.push_back({{"left", p.left}, {"right", p.right}, {"terms", terms}});
  }
  Outcome o;
  o.result = {{"word", w.indices},
              {"products", products},
              {"t0", to_json(family.t0)},
              {"semigroup_algebra", to_json(table)},
              {"t0_equals_semigroup_algebra", family.t0 == table},
              {"t1_equals_t0", family.t1 == family.t0},
              {"associativity_violations", associativity_violations(table).size()}};
  o.passed = family.t0 == table && nonzero && associativity_violations(table).empty();
  return o;
}

using Handler = std::function<Outcome(const Context&)>;

const std::map<std::string, Handler>& handlers();

Outcome cmd_suite(const Context& ctx) {
  struct Item {
    std::string command;
    Json config;
  };
  std::vector<Item> items;
  const Json seed = ctx.config.seed;
  for (int m = 0; m <= 5; ++m) {
    items.push_back({"verify-main-theorem", {{"family", "A"}, {"rank", 1}, {"lambda", {m}}}});
    items.push_back({"nok string-polytope", {{"family", "A"}, {"rank", 1}, {"lambda", {m}}, {"scaling", 3}}});
    items.push_back({"strings oracle", {{"family", "A"}, {"rank", 1}, {"lambda", {m}}}});
  }
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      items.push_back({"verify-main-theorem", {{"family", "A"}, {"rank", 2}, {"lambda", {a, b}}, {"random", 20}, {"seed", seed}}});
      items.push_back({"nok string-polytope", {{"family", "A"}, {"rank", 2}, {"lambda", {a, b}}, {"scaling", 3}}});
      items.push_back({"strings oracle", {{"family", "A"}, {"rank", 2}, {"lambda", {a, b}}}});
    }
  }
  for (auto lambda : {std::vector<int>{1, 0}, std::vector<int>{0, 1}}) {
    items.push_back({"verify-main-theorem", {{"family", "C"}, {"rank", 2}, {"word", {1, 2, 1, 2}}, {"lambda", lambda}}});
    items.push_back({"nok string-polytope", {{"family", "C"}, {"rank", 2}, {"word", {1, 2, 1, 2}}, {"lambda", lambda},
                                             {"level_cap", 3}, {"dimension_cap", 300}, {"scaling", 3}}});
  }
  items.push_back({"nok degree", {{"family", "A"}, {"rank", 2}, {"lambda", {1, 1}}, {"levels", 7}}});
  items.push_back({"poly axioms", {{"samples", 200}, {"seed", seed}}});
  items.push_back({"expand", {{"family", "A"}, {"rank", 2}, {"lambda", {1, 0}}, {"mu", {1, 0}}}});
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n)
      items.push_back({"expand", {{"family", "A"}, {"rank", 1}, {"lambda", {m}}, {"mu", {n}}}});
  Json x_plus_y = {{"vars", 2}, {"terms", {{{"exp", {1, 0}}, {"coef", "1"}}, {{"exp", {0, 1}}, {"coef", "1"}}}}};
  Json xy = {{"vars", 2}, {"terms", {{{"exp", {1, 1}}, {"coef", "1"}}}}};
  Json x2y2 = {{"vars", 2}, {"terms", {{{"exp", {2, 0}}, {"coef", "1"}}, {{"exp", {0, 2}}, {"coef", "1"}}}}};
  items.push_back({"sagbi subduct", {{"poly", x2y2}, {"generators", {x_plus_y, xy}}}});
  for (const auto& [fam, rank, lambda] : {std::tuple{"A", 1, std::vector<int>{1}}, std::tuple{"A", 2, std::vector<int>{1, 0}}}) {
    items.push_back({"sagbi check", {{"family", fam}, {"rank", rank}, {"lambda", lambda}, {"level_cap", 3}}});
    items.push_back({"sagbi degenerate", {{"family", fam}, {"rank", rank}, {"lambda", lambda}, {"level_cap", 3}}});
  }
  items.push_back({"nok fibered", {{"data", "builtin:a1-toy"}, {"level_cap", 4}}});
  items.push_back({"nok fibered", {{"family", "A"}, {"rank", 1}, {"data", "builtin:flag"}, {"lambda", {1}}, {"level_cap", 4}}});
  items.push_back({"nok fibered", {{"family", "A"}, {"rank", 2}, {"data", "builtin:flag"}, {"lambda", {1, 1}}, {"level_cap", 4}}});
  items.push_back({"nok moment", {{"data", "builtin:a1-toy"}, {"level_cap", 4}}});

  Outcome o;
  o.result = Json::array();
  for (const auto& item : items) {
    RunConfig sub = parse_config(item.config);
    Outcome r = handlers().at(item.command)(Context(sub));
    o.passed = o.passed && r.passed;
    o.result.push_back({{"command", item.command}, {"config", item.config}, {"passed", r.passed}, {"result", r.result}});
  }
  return o;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"roots", cmd_roots},
      {"module", cmd_module},
      {"strings value-set", cmd_value_set},
      {"strings oracle", cmd_oracle},
      {"strings cone", cmd_cone},
      {"poly valuation", cmd_poly_valuation},
      {"poly axioms", cmd_poly_axioms},
      {"verify-main-theorem", cmd_main_theorem},
      {"expand", cmd_expand},
      {"nok string-polytope", cmd_string_polytope},
      {"nok degree", cmd_degree},
      {"nok moment", cmd_moment},
      {"nok fibered", cmd_fibered},
      {"sagbi subduct", cmd_subduct},
      {"sagbi check", cmd_sagbi_check},
      {"sagbi degenerate", cmd_degenerate},
      {"suite", cmd_suite},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, h] : handlers()) out.push_back(name);
  return out;
}

Json run_command(const std::string& command, const RunConfig& config) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw UsageError("unknown command \"" + command + "\"");
  Outcome o = it->second(Context(config));
  return {{"tool", "strval"},   {"version", version()}, {"command", command},
          {"config", to_json(config)}, {"result", o.result}, {"passed", o.passed}};
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      std::string s = "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += " ";
        s += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
      }
      rows.emplace_back(path, s + "]");
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// "p/q" gets a marked decimal approximation for human tables.
std::string with_decimal(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos || s.find(' ') != std::string::npos) return s;
  try {
    Rational q = parse_rational(s);
    std::ostringstream out;
    out << s << " (~" << std::setprecision(6) << q.convert_to<double>() << ")";
    return out.str();
  } catch (const Error&) {
    return s;
  }
}

}  // namespace

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string out;
  if (format == "csv") {
    out = "key,value\n";
    for (const auto& [k, v] : rows) out += csv_field(k) + "," + csv_field(v) + "\n";
    return out;
  }
  if (format == "table") {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + with_decimal(v) + "\n";
    return out;
  }
  throw UsageError("format must be json, csv or table");
}

}  // namespace strval
