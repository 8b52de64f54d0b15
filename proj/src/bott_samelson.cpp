#include "strval/bott_samelson.hpp"

#include "strval/errors.hpp"

#include <algorithm>

namespace strval {

std::vector<MultiPoly> chart_orbit(const HWModule& module, const WeylWord& word) {
  validate_word(module.spec, word);
  const int nvars = static_cast<int>(word.size());
  const int dim = module.dim();
  std::vector<MultiPoly> w(dim, MultiPoly(nvars));
  w[module.hw_index] = MultiPoly::constant(nvars, 1);
  for (int k = nvars - 1; k >= 0; --k) {
    const SparseMatrix& f = module.op_F[word[k] - 1];
    std::vector<MultiPoly> acc = w;
    std::vector<MultiPoly> power = w;  // F^p w / p!
    for (int p = 1;; ++p) {
      std::vector<MultiPoly> next(dim, MultiPoly(nvars));
      bool nonzero = false;
      for (int c = 0; c < dim; ++c) {
        if (power[c].is_zero()) continue;
        for (const auto& [r, x] : f.col(c).entries()) {
          next[r] += (x / p) * power[c];
          nonzero = true;
        }
      }
      if (!nonzero) break;
      if (p > dim) throw ConsistencyError("F is not nilpotent on the module");
      Exponent e(nvars, 0);
      e[k] = p;
      MultiPoly tk = MultiPoly::monomial(e);
      for (int c = 0; c < dim; ++c)
        if (!next[c].is_zero()) acc[c] += tk * next[c];
      power = std::move(next);
    }
    w = std::move(acc);
  }
  return w;
}

MultiPoly matrix_coeff_poly(const std::vector<MultiPoly>& orbit, const DualVector& sigma) {
  if (sigma.is_zero()) throw DomainError("matrix coefficient of the zero functional requested");
  MultiPoly f(orbit.empty() ? 0 : orbit[0].num_vars());
  for (std::size_t j = 0; j < orbit.size(); ++j)
    if (sigma.coords[j] != 0) f += sigma.coords[j] * orbit[j];
  return f;
}

SectionPoly matrix_coeff_poly(const HWModule& module, const WeylWord& word, const DualVector& sigma) {
  return SectionPoly{matrix_coeff_poly(chart_orbit(module, word), sigma), module.lambda, word, sigma};
}

StringParams geometric_valuation(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial is undefined");
  const Exponent& e = f.lex_max_exponent();
  return StringParams{std::vector<int>(e.begin(), e.end())};
}

MainTheoremCheck verify_main_theorem(const HWModule& module, const WeylWord& word, const DualVector& sigma,
                                     const std::vector<MultiPoly>& orbit) {
  return MainTheoremCheck{string_params(module, word, sigma), geometric_valuation(matrix_coeff_poly(orbit, sigma))};
}

MainTheoremCheck verify_main_theorem(const HWModule& module, const WeylWord& word, const DualVector& sigma) {
  return verify_main_theorem(module, word, sigma, chart_orbit(module, word));
}

SectionBasis section_basis(const HWModule& module, const WeylWord& word) {
  SectionBasis b{value_set(module, word), {}};
  auto orbit = chart_orbit(module, word);
  for (const auto& r : b.values.representatives) b.polys.push_back(matrix_coeff_poly(orbit, r));
  return b;
}

std::vector<ExpansionTerm> expand_in_basis(const MultiPoly& f, const SectionBasis& basis) {
  std::map<Exponent, int> by_leading;
  for (std::size_t k = 0; k < basis.polys.size(); ++k) {
    auto [it, inserted] = by_leading.emplace(basis.polys[k].lex_max_exponent(), static_cast<int>(k));
    if (!inserted) throw ConsistencyError("section basis has repeated leading exponents");
  }
  std::vector<ExpansionTerm> terms;
  MultiPoly rem = f;
  while (!rem.is_zero()) {
    const Exponent& lead = rem.lex_max_exponent();
    auto it = by_leading.find(lead);
    if (it == by_leading.end())
      throw ConsistencyError("product is not in the span of the section basis (leading exponent " +
                             to_string(StringParams{lead}) + ")");
    const MultiPoly& b = basis.polys[it->second];
    Rational c = rem.terms().rbegin()->second / b.terms().rbegin()->second;
    terms.push_back({it->second, StringParams{lead}, c});
    rem -= c * b;
  }
  return terms;
}

ProductExpansion expand_product(const HWModule& module_lambda, const HWModule& module_mu,
                                const SectionBasis& basis_sum, const WeylWord& word, const DualVector& sigma,
                                const DualVector& tau) {
  if (!(module_lambda.spec == module_mu.spec)) throw DomainError("modules over different root systems");
  ProductExpansion out;
  out.expected_leading = string_params(module_lambda, word, sigma) + string_params(module_mu, word, tau);
  MultiPoly fs = matrix_coeff_poly(module_lambda, word, sigma).poly;
  MultiPoly ft = matrix_coeff_poly(module_mu, word, tau).poly;
  out.terms = expand_in_basis(fs * ft, basis_sum);
  out.leading_additive = !out.terms.empty() && out.terms[0].value == out.expected_leading;
  out.others_strictly_smaller = std::all_of(out.terms.begin() + (out.terms.empty() ? 0 : 1), out.terms.end(),
                                            [&](const ExpansionTerm& t) { return t.value < out.expected_leading; });
  return out;
}

WeightedValue weight_extended_valuation(const WeightedFunction& f) {
  for (const auto& [w, p] : f) {
    if (!p.is_zero()) return WeightedValue{w, geometric_valuation(p)};
  }
  throw DomainError("weight-extended valuation of the zero function is undefined");
}

WeightedFunction multiply(const WeightedFunction& a, const WeightedFunction& b) {
  WeightedFunction out;
  for (const auto& [wa, pa] : a) {
    for (const auto& [wb, pb] : b) {
      MultiPoly prod = pa * pb;
      auto [it, inserted] = out.emplace(wa + wb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace strval
