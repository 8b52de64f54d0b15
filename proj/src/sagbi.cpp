#include "strval/sagbi.hpp"

#include "strval/bott_samelson.hpp"
#include "strval/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace strval {

namespace {

MultiPoly in_priority(const ValuedAlgebra& alg, const MultiPoly& p) {
  return alg.order.empty() ? p : p.permuted(alg.order);
}

const Exponent& leading_exponent(const ValuedAlgebra& alg, const MultiPoly& permuted) {
  return alg.kind == TermValuation::Highest ? permuted.lex_max_exponent() : permuted.lex_min_exponent();
}

AlgebraElement one(int num_vars) { return {0, MultiPoly::constant(num_vars, 1)}; }

AlgebraElement monomial_in(const std::vector<AlgebraElement>& gens, const std::vector<int>& d, int num_vars) {
  AlgebraElement out = one(num_vars);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int e = 0; e < d[i]; ++e) out = out * gens[i];
  return out;
}

}  // namespace

LatticePoint value_key(const ValuedAlgebra& alg, const AlgebraElement& f) {
  if (f.poly.is_zero()) throw DomainError("value of the zero element");
  MultiPoly p = in_priority(alg, f.poly);
  const Exponent& e = leading_exponent(alg, p);
  LatticePoint key;
  if (alg.graded) key.push_back(f.degree);
  key.insert(key.end(), e.begin(), e.end());
  return key;
}

Rational leading_coefficient(const ValuedAlgebra& alg, const AlgebraElement& f) {
  if (f.poly.is_zero()) throw DomainError("leading coefficient of the zero element");
  MultiPoly p = in_priority(alg, f.poly);
  return p.coefficient(leading_exponent(alg, p));
}

GradedValue element_value(const ValuedAlgebra& alg, const AlgebraElement& f) {
  if (f.poly.is_zero()) throw DomainError("value of the zero element");
  ValVector v = alg.kind == TermValuation::Highest ? highest_term_valuation(f.poly, alg.order)
                                                   : lowest_term_valuation(f.poly, alg.order);
  return {alg.graded ? f.degree : 0, v};
}

std::optional<std::vector<int>> semigroup_decomposition(const std::vector<LatticePoint>& gens,
                                                        const LatticePoint& target) {
  for (const auto& g : gens) {
    if (g.size() != target.size()) throw DomainError("generator key has wrong dimension");
    if (std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; }))
      throw DomainError("generator with zero value key");
    if (std::any_of(g.begin(), g.end(), [](auto x) { return x < 0; }))
      throw DomainError("generator with negative value key");
  }
  std::vector<int> d(gens.size(), 0);
  LatticePoint rest = target;
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return std::all_of(rest.begin(), rest.end(), [](auto x) { return x == 0; });
    std::int64_t bound = -1;
    for (std::size_t c = 0; c < rest.size(); ++c) {
      if (gens[i][c] == 0) continue;
      std::int64_t b = rest[c] < 0 ? -1 : rest[c] / gens[i][c];
      bound = bound < 0 ? b : std::min(bound, b);
      if (bound < 0) break;
    }
    for (std::int64_t e = bound; e >= 0; --e) {
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= e * gens[i][c];
      d[i] = static_cast<int>(e);
      bool found = search(i + 1);
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] += e * gens[i][c];
      if (found) return true;
    }
    d[i] = 0;
    return false;
  };
  if (std::any_of(target.begin(), target.end(), [](auto x) { return x < 0; })) return std::nullopt;
  if (!search(0)) return std::nullopt;
  return d;
}

std::string to_string(SubductionStatus s) {
  switch (s) {
    case SubductionStatus::Complete: return "complete";
    case SubductionStatus::NotRepresentable: return "not-representable";
    case SubductionStatus::StepCapExceeded: return "step-cap-exceeded";
  }
  return "unknown";
}

SubductionTrace subduct(const ValuedAlgebra& alg, const AlgebraElement& h, const std::vector<AlgebraElement>& gens,
                        int step_cap) {
  const int num_vars = h.poly.num_vars();
  std::vector<LatticePoint> keys;
  for (const auto& g : gens) {
    if (g.poly.num_vars() != num_vars) throw DomainError("generator lives in a different polynomial ring");
    keys.push_back(value_key(alg, g));
  }
  SubductionTrace trace;
  AlgebraElement g = h;
  while (!g.poly.is_zero()) {
    if (static_cast<int>(trace.steps.size()) >= step_cap) {
      trace.status = SubductionStatus::StepCapExceeded;
      break;
    }
    const GradedValue value = element_value(alg, g);
    auto d = semigroup_decomposition(keys, value_key(alg, g));
    if (!d) {
      trace.status = SubductionStatus::NotRepresentable;
      trace.witness = value;
      break;
    }
    AlgebraElement m = monomial_in(gens, *d, num_vars);
    Rational c = leading_coefficient(alg, g) / leading_coefficient(alg, m);
    AlgebraElement next{g.degree, g.poly - c * m.poly};
    if (!next.poly.is_zero() && !(element_value(alg, next) > value))
      throw ConsistencyError("subduction step did not raise the value " + to_string(value.tail));
    trace.steps.push_back({*d, c, value});
    g = std::move(next);
  }
  trace.remainder = g;
  return trace;
}

AlgebraElement replay(const SubductionTrace& trace, const std::vector<AlgebraElement>& gens, int num_vars) {
  MultiPoly total = trace.remainder.poly.is_zero() ? MultiPoly(num_vars) : trace.remainder.poly;
  for (const auto& step : trace.steps) total += step.scalar * monomial_in(gens, step.exponents, num_vars).poly;
  return {trace.remainder.degree, total};
}

SagbiReport is_sagbi(const ValuedAlgebra& alg, const std::vector<AlgebraElement>& gens,
                     const std::vector<AlgebraElement>& sample) {
  SagbiReport report;
  std::vector<LatticePoint> keys;
  for (const auto& g : gens) keys.push_back(value_key(alg, g));

  // All values of the sampled span: leaf-reduce each degree separately.
  std::map<int, std::vector<MultiPoly>> by_degree;
  for (const auto& f : sample)
    if (!f.poly.is_zero()) by_degree[alg.graded ? f.degree : 0].push_back(f.poly);
  for (auto& [degree, polys] : by_degree) {
    // Drop dependent elements so that the reduction sees a basis.
    std::vector<MultiPoly> independent;
    {
      std::vector<MultiPoly> reduced;
      for (const auto& p : polys) {
        reduced.push_back(p);
        try {
          leaf_reduce(reduced, alg.kind, alg.order);
          independent.push_back(p);
        } catch (const LeafSeparationError&) {
          reduced.pop_back();
        }
      }
    }
    for (const auto& p : leaf_reduce(independent, alg.kind, alg.order)) {
      AlgebraElement f{degree, p};
      ++report.values_checked;
      if (!semigroup_decomposition(keys, value_key(alg, f))) {
        report.witness = element_value(alg, f);
        report.reason = "value outside the semigroup generated by the generator values";
        return report;
      }
    }
  }
  for (const auto& f : sample) {
    if (f.poly.is_zero()) continue;
    auto trace = subduct(alg, f, gens);
    ++report.elements_subducted;
    if (!trace.complete()) {
      report.witness = trace.witness ? *trace.witness : element_value(alg, trace.remainder);
      report.reason = "subduction " + to_string(trace.status);
      return report;
    }
  }
  return report;
}

std::vector<std::pair<int, LatticePoint>> minimal_generators(const ValueSemigroup& s) {
  std::vector<std::pair<int, LatticePoint>> gens;
  std::vector<LatticePoint> keys;
  for (const auto& [k, points] : s.levels) {
    for (const auto& p : points) {
      LatticePoint key{k};
      key.insert(key.end(), p.begin(), p.end());
      if (std::all_of(key.begin(), key.end(), [](auto x) { return x == 0; })) continue;
      if (std::any_of(key.begin(), key.end(), [](auto x) { return x < 0; }))
        throw DomainError("minimal_generators expects nonnegative points");
      if (semigroup_decomposition(keys, key)) continue;
      gens.emplace_back(k, p);
      keys.push_back(std::move(key));
    }
  }
  return gens;
}

int MultiplicationTable::index_of(int level, const LatticePoint& p) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), std::make_pair(level, p));
  if (it == basis.end() || it->first != level || it->second != p) return -1;
  return static_cast<int>(it - basis.begin());
}

MultiplicationTable semigroup_algebra(const ValueSemigroup& s) {
  MultiplicationTable t;
  for (const auto& [k, points] : s.levels)
    for (const auto& p : points) t.basis.emplace_back(k, p);
  const int top = s.max_level();
  const int n = static_cast<int>(t.basis.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int level = t.basis[i].first + t.basis[j].first;
      if (level > top) continue;
      LatticePoint sum(s.dim);
      for (int c = 0; c < s.dim; ++c) sum[c] = t.basis[i].second[c] + t.basis[j].second[c];
      int k = t.index_of(level, sum);
      if (k < 0) throw ConsistencyError("semigroup sample is not closed under addition at level " + std::to_string(level));
      t.entries.push_back({i, j, {{k, Rational(1)}}});
    }
  }
  return t;
}

std::vector<std::vector<int>> associativity_violations(const MultiplicationTable& t) {
  const int n = static_cast<int>(t.basis.size());
  std::map<std::pair<int, int>, const MultiplicationTable::Entry*> lookup;
  for (const auto& e : t.entries) lookup[{e.left, e.right}] = &e;
  using Vec = std::map<int, Rational>;
  // Product of a basis element with a vector; nullopt when some product is out of range.
  auto times = [&](const Vec& v, int b) -> std::optional<Vec> {
    Vec out;
    for (const auto& [i, c] : v) {
      auto it = lookup.find({std::min(i, b), std::max(i, b)});
      if (it == lookup.end()) return std::nullopt;
      for (const auto& [k, d] : it->second->product) out[k] += c * d;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto ij = times(Vec{{i, 1}}, j);
        auto jk = times(Vec{{j, 1}}, k);
        if (!ij || !jk) continue;
        auto left = times(*ij, k);
        auto right = times(*jk, i);
        if (!left || !right) continue;
        if (*left != *right) out.push_back({i, j, k});
      }
  return out;
}

DegenerationReport degeneration_family(const ValuedAlgebra& alg,
                                       const std::vector<std::vector<AlgebraElement>>& levels) {
  if (!alg.graded) throw DomainError("degeneration_family needs a graded algebra");
  DegenerationReport r;
  std::vector<std::pair<std::pair<int, LatticePoint>, AlgebraElement>> items;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (const auto& f : levels[k]) {
      if (f.degree != static_cast<int>(k)) throw DomainError("basis element filed under the wrong level");
      LatticePoint key = value_key(alg, f);
      LatticePoint point(key.begin() + 1, key.end());
      AlgebraElement normalized{f.degree, (1 / leading_coefficient(alg, f)) * f.poly};
      items.push_back({{f.degree, point}, normalized});
    }
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < items.size(); ++i)
    if (items[i].first == items[i + 1].first) throw DomainError("basis keys are not pairwise distinct");
  for (auto& [key, f] : items) {
    r.basis.push_back(key);
    r.elements.push_back(std::move(f));
  }
  r.t0.basis = r.basis;
  r.t1.basis = r.basis;
  const int top = static_cast<int>(levels.size()) - 1;
  const int n = static_cast<int>(r.basis.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      AlgebraElement product = r.elements[i] * r.elements[j];
      if (product.degree > top) continue;
      DegenerationProduct dp{i, j, {}};
      const GradedValue expected = element_value(alg, r.elements[i]) + element_value(alg, r.elements[j]);
      AlgebraElement rest = product;
      GradedValue leading_value;
      while (!rest.poly.is_zero()) {
        LatticePoint key = value_key(alg, rest);
        int b = r.t0.index_of(rest.degree, LatticePoint(key.begin() + 1, key.end()));
        if (b < 0) throw ConsistencyError("product leaves the sampled span");
        Rational c = leading_coefficient(alg, rest) / leading_coefficient(alg, r.elements[b]);
        GradedValue v = element_value(alg, rest);
        if (dp.terms.empty()) {
          if (v != expected)
            throw ConsistencyError("product " + std::to_string(i) + " * " + std::to_string(j) +
                                   " has non-additive leading value");
          leading_value = v;
        }
        ValVector gap = v.tail;
        for (std::size_t c2 = 0; c2 < gap.v.size(); ++c2) gap.v[c2] -= leading_value.tail.v[c2];
        dp.terms.push_back({b, c, gap});
        rest.poly -= c * r.elements[b].poly;
      }
      r.t0.entries.push_back({i, j, {{dp.terms[0].basis_index, dp.terms[0].coefficient}}});
      MultiplicationTable::Entry full{i, j, {}};
      for (const auto& t : dp.terms) full.product.emplace_back(t.basis_index, t.coefficient);
      std::sort(full.product.begin(), full.product.end());
      r.t1.entries.push_back(std::move(full));
      r.products.push_back(std::move(dp));
    }
  }
  return r;
}

SectionRingSample section_ring_sample(const RootSystemSpec& spec, const WeylWord& word, const Weight& lambda,
                                      int level_cap, std::int64_t dimension_cap) {
  validate_word(spec, word);
  validate_weight(spec, lambda);
  if (level_cap < 0) throw DomainError("level cap must be nonnegative");
  const int n = static_cast<int>(word.size());
  SectionRingSample s;
  s.spanning.push_back({one(n)});
  s.basis.push_back({one(n)});
  for (int k = 1; k <= level_cap; ++k) {
    auto module = build_hw_module(spec, k * lambda, dimension_cap);
    auto orbit = chart_orbit(module, word);
    std::vector<AlgebraElement> span;
    for (int j = 0; j < module.dim(); ++j)
      span.push_back({k, matrix_coeff_poly(orbit, dual_basis_vector(module, j))});
    std::vector<AlgebraElement> basis;
    for (auto& p : section_basis(module, word).polys) basis.push_back({k, std::move(p)});
    s.spanning.push_back(std::move(span));
    s.basis.push_back(std::move(basis));
  }
  return s;
}

ValueSemigroup basis_semigroup(const ValuedAlgebra& alg, const std::vector<std::vector<AlgebraElement>>& levels) {
  if (!alg.graded) throw DomainError("basis_semigroup needs a graded algebra");
  ValueSemigroup s;
  bool first = true;
  for (const auto& level : levels) {
    for (const auto& f : level) {
      LatticePoint key = value_key(alg, f);
      if (first) {
        s.dim = static_cast<int>(key.size()) - 1;
        first = false;
      }
      s.add(key[0], LatticePoint(key.begin() + 1, key.end()));
    }
  }
  return s;
}

}  // namespace strval
