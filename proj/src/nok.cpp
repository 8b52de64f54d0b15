#include "strval/nok.hpp"

#include "strval/errors.hpp"

#include <algorithm>
#include <optional>

namespace strval {

void ValueSemigroup::add(int level, LatticePoint point) {
  if (static_cast<int>(point.size()) != dim) throw DomainError("semigroup point has wrong dimension");
  if (level < 0) throw DomainError("semigroup level must be nonnegative");
  levels[level].insert(std::move(point));
}

std::size_t ValueSemigroup::size() const {
  std::size_t n = 0;
  for (const auto& [k, pts] : levels) n += pts.size();
  return n;
}

std::vector<std::pair<int, LatticePoint>> ValueSemigroup::closure_violations() const {
  std::vector<std::pair<int, LatticePoint>> out;
  const int top = max_level();
  for (auto a = levels.begin(); a != levels.end(); ++a) {
    for (auto b = a; b != levels.end(); ++b) {
      const int level = a->first + b->first;
      if (level > top) break;
      auto target = levels.find(level);
      for (const auto& x : a->second) {
        for (const auto& y : b->second) {
          LatticePoint s(dim);
          for (int c = 0; c < dim; ++c) s[c] = x[c] + y[c];
          if (target == levels.end() || !target->second.count(s)) out.emplace_back(level, std::move(s));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<RationalVector> scaled_points(const ValueSemigroup& s, int level_cap) {
  std::vector<RationalVector> pts;
  for (const auto& [k, points] : s.levels) {
    if (k <= 0 || k > level_cap) continue;
    for (const auto& x : points) {
      RationalVector v;
      for (auto c : x) v.emplace_back(Rational(c, k));
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

}  // namespace

NokBody nok_body(const ValueSemigroup& semigroup, int level_cap) {
  auto pts = scaled_points(semigroup, level_cap);
  if (pts.empty()) throw DomainError("Newton-Okounkov body of an empty semigroup");
  NokBody out;
  out.level_cap = level_cap;
  out.body = convex_hull(std::move(pts), semigroup.dim);
  if (level_cap >= 2) {
    auto previous = scaled_points(semigroup, level_cap - 1);
    if (!previous.empty()) out.stabilized = convex_hull(std::move(previous), semigroup.dim) == out.body;
  }
  return out;
}

ValueSemigroup string_semigroup(const RootSystemSpec& spec, const WeylWord& word, const Weight& lambda, int level_cap,
                                std::int64_t dimension_cap) {
  validate_word(spec, word);
  validate_weight(spec, lambda);
  if (!lambda.dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  if (level_cap < 1) throw DomainError("level cap must be at least 1");
  for (int k = 1; k <= level_cap; ++k) {
    if (weyl_dim(spec, k * lambda) > dimension_cap)
      throw CapabilityError("dim V_" + to_string(k * lambda) + " exceeds the dimension cap " +
                            std::to_string(dimension_cap));
  }
  ValueSemigroup s;
  s.dim = static_cast<int>(word.size());
  s.add(0, LatticePoint(s.dim, 0));
  for (int k = 1; k <= level_cap; ++k) {
    auto module = build_hw_module(spec, k * lambda, dimension_cap);
    for (const auto& p : value_set(module, word).points) s.add(k, LatticePoint(p.a.begin(), p.a.end()));
  }
  return s;
}

NokBody string_polytope(const RootSystemSpec& spec, const WeylWord& word, const Weight& lambda, int level_cap,
                        std::int64_t dimension_cap) {
  return nok_body(string_semigroup(spec, word, lambda, level_cap, dimension_cap), level_cap);
}

std::vector<ConeGap> cone_gaps(const ValueSemigroup& semigroup, const RationalPolytope& body) {
  std::vector<ConeGap> out;
  for (const auto& [k, points] : semigroup.levels) {
    if (k <= 0) continue;
    std::set<LatticePoint> lattice;
    for (auto& p : lattice_points(body, k)) lattice.insert(LatticePoint(p.begin(), p.end()));
    for (const auto& p : points)
      if (!lattice.count(p)) out.push_back({k, p, true});
    for (const auto& p : lattice)
      if (!points.count(p)) out.push_back({k, p, false});
  }
  return out;
}

DegreeReport degree_check(const std::vector<BigInt>& hilbert, const RationalPolytope& body) {
  if (body.empty()) throw DomainError("degree check on an empty body");
  DegreeReport r;
  r.q = body.dim;
  r.hilbert = hilbert;
  const int n = static_cast<int>(hilbert.size());
  if (n < r.q + 2) throw DomainError("degree check needs at least q + 2 Hilbert values, got " + std::to_string(n));

  // Newton form through the last q + 1 points k0, ..., k0 + q.
  const int k0 = n - 1 - r.q;
  std::vector<Rational> diffs;
  {
    std::vector<Rational> row(hilbert.begin() + k0, hilbert.end());
    for (int j = 0; j <= r.q; ++j) {
      diffs.push_back(row[0]);
      for (std::size_t t = 0; t + 1 < row.size(); ++t) row[t] = row[t + 1] - row[t];
      row.pop_back();
    }
  }
  auto evaluate = [&](int k) {
    // sum_j diffs[j] * binom(k - k0, j)
    Rational total = 0, binom = 1;
    for (int j = 0; j <= r.q; ++j) {
      total += diffs[j] * binom;
      binom = binom * Rational(k - k0 - j) / Rational(j + 1);
    }
    return total;
  };
  for (int k = 0; k < n; ++k) {
    if (evaluate(k) != Rational(hilbert[k]))
      throw ConsistencyError("Hilbert value H(" + std::to_string(k) + ") = " + hilbert[k].str() +
                             " is off the fitted degree-" + std::to_string(r.q) + " polynomial");
  }
  Rational fact = 1;
  for (int t = 2; t <= r.q; ++t) fact *= t;
  r.degree_from_hilbert = diffs[r.q];
  r.leading_coefficient = diffs[r.q] / fact;
  if (r.q == 0) {
    r.volume = 1;
  } else {
    if (body.dim < body.ambient_dim)
      throw CapabilityError("degree check needs a full-dimensional body (intrinsic dim " + std::to_string(body.dim) +
                            " in ambient dim " + std::to_string(body.ambient_dim) + ")");
    r.volume = volume(body).volume;
  }
  r.degree_from_volume = fact * r.volume;
  return r;
}

int IsotypicData::max_level() const {
  int top = -1;
  for (const auto& [key, m] : multiplicity)
    if (m > 0) top = std::max(top, key.first);
  return top;
}

std::vector<Weight> IsotypicData::support(int level) const {
  std::vector<Weight> out;
  for (const auto& [key, m] : multiplicity)
    if (key.first == level && m > 0) out.push_back(key.second);
  return out;
}

std::vector<std::string> IsotypicData::violations() const {
  std::vector<std::string> out;
  std::optional<RationalPolytope> moment;
  if (!moment_vertices.empty()) moment = convex_hull(moment_vertices, spec.rank);
  for (const auto& [key, m] : multiplicity) {
    const auto& [k, lambda] = key;
    const std::string where = "(" + std::to_string(k) + ", " + to_string(lambda) + ")";
    if (m != 0 && m != 1) out.push_back("multiplicity " + std::to_string(m) + " at " + where + " is not 0 or 1");
    if (static_cast<int>(lambda.coords.size()) != spec.rank) {
      out.push_back("weight at " + where + " has wrong rank");
      continue;
    }
    if (!lambda.dominant()) out.push_back("weight at " + where + " is not dominant");
    if (k < 0) out.push_back("negative level at " + where);
    if (moment && m > 0) {
      RationalVector x(lambda.coords.begin(), lambda.coords.end());
      if (!moment->contains(x, k)) out.push_back("weight at " + where + " lies outside k * moment polytope");
    }
  }
  return out;
}

IsotypicData flag_datum(const RootSystemSpec& spec, const Weight& lambda, int level_cap) {
  validate_weight(spec, lambda);
  if (!lambda.dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  IsotypicData d;
  d.spec = spec;
  d.name = "flag " + to_string(lambda);
  for (int k = 0; k <= level_cap; ++k) d.multiplicity[{k, k * lambda}] = 1;
  d.moment_vertices.push_back(RationalVector(lambda.coords.begin(), lambda.coords.end()));
  return d;
}

IsotypicData a1_toy_datum(int level_cap) {
  IsotypicData d;
  d.spec = root_system(Family::A, 1);
  d.name = "a1-toy";
  for (int k = 0; k <= level_cap; ++k)
    for (int m = 0; m <= k; ++m) d.multiplicity[{k, Weight{{m}}}] = 1;
  d.moment_vertices = {{Rational(0)}, {Rational(1)}};
  return d;
}

bool weight_order_less(const WeightKey& a, const WeightKey& b) {
  if (a.level != b.level) return a.level > b.level;
  return a.weight < b.weight;
}

WeightKey weight_valuation(const std::vector<WeightKey>& support) {
  if (support.empty()) throw DomainError("weight valuation of the zero element");
  return *std::max_element(support.begin(), support.end(), weight_order_less);
}

RationalPolytope moment_body(const IsotypicData& data, int level_cap) {
  std::vector<RationalVector> pts;
  for (const auto& [key, m] : data.multiplicity) {
    const auto& [k, lambda] = key;
    if (m == 0 || k <= 0 || k > level_cap) continue;
    RationalVector v;
    for (int c : lambda.coords) v.emplace_back(Rational(c, k));
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw DomainError("moment body of data with no positive-level support");
  return convex_hull(std::move(pts), data.spec.rank);
}

ValueSemigroup weight_semigroup(const IsotypicData& data, int level_cap) {
  ValueSemigroup s;
  s.dim = data.spec.rank;
  for (int k = 0; k <= level_cap; ++k) {
    for (const auto& lambda : data.support(k)) {
      // A nonzero element of R_{k,lambda} has support {(k, lambda)}.
      WeightKey v = weight_valuation({WeightKey{k, lambda}});
      s.add(v.level, LatticePoint(v.weight.coords.begin(), v.weight.coords.end()));
    }
  }
  return s;
}

RationalPolytope fibered_polytope(const IsotypicData& data, const WeylWord& word, int level_cap,
                                  std::int64_t dimension_cap) {
  validate_word(data.spec, word);
  if (!is_reduced(data.spec, word) || weyl_length(data.spec, word) != data.spec.num_positive_roots)
    throw DomainError("word " + to_string(word) + " is not a reduced word for w0");
  const int r = data.spec.rank;
  const int n = static_cast<int>(word.size());
  std::map<Weight, std::set<StringParams>> fibres;
  std::vector<RationalVector> pts;
  for (int k = 1; k <= level_cap; ++k) {
    for (const auto& lambda : data.support(k)) {
      if (weyl_dim(data.spec, lambda) > dimension_cap)
        throw CapabilityError("dim V_" + to_string(lambda) + " exceeds the dimension cap " +
                              std::to_string(dimension_cap));
      auto it = fibres.find(lambda);
      if (it == fibres.end()) {
        auto module = build_hw_module(data.spec, lambda, dimension_cap);
        it = fibres.emplace(lambda, value_set(module, word).points).first;
      }
      for (const auto& a : it->second) {
        RationalVector v;
        v.reserve(r + n);
        for (int c : lambda.coords) v.emplace_back(Rational(c, k));
        for (int c : a.a) v.emplace_back(Rational(c, k));
        pts.push_back(std::move(v));
      }
    }
  }
  if (pts.empty()) throw DomainError("fibered polytope over an empty moment polytope");
  return convex_hull(std::move(pts), r + n);
}

std::uint64_t isotypic_dimension(const IsotypicData& data, int level) {
  std::uint64_t total = 0;
  for (const auto& lambda : data.support(level)) total += static_cast<std::uint64_t>(weyl_dim(data.spec, lambda));
  return total;
}

}  // namespace strval
