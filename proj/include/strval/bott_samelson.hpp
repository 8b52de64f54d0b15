#pragma once

#include "strval/hwmodule.hpp"
#include "strval/poly.hpp"
#include "strval/strings.hpp"

#include <map>
#include <optional>
#include <vector>

namespace strval {

/// f_sigma in the chart coordinates t_1..t_N.
struct SectionPoly {
  MultiPoly poly;
  Weight lambda;
  WeylWord word;
  DualVector sigma;
};

/// The vector-valued polynomial exp(t_1 F_{i_1}) ... exp(t_N F_{i_N}) v_lambda in module
/// coordinates: component j is the coefficient of basis vector j.
std::vector<MultiPoly> chart_orbit(const HWModule& module, const WeylWord& word);

/// f_sigma(t) = sigma(exp(t_1 F_{i_1}) ... exp(t_N F_{i_N}) v_lambda).
SectionPoly matrix_coeff_poly(const HWModule& module, const WeylWord& word, const DualVector& sigma);
/// Same, reusing a precomputed chart_orbit.
MultiPoly matrix_coeff_poly(const std::vector<MultiPoly>& orbit, const DualVector& sigma);

/// -v_{w0}(f): the lex-largest exponent of f under t_1 > ... > t_N.
StringParams geometric_valuation(const MultiPoly& f);

struct MainTheoremCheck {
  StringParams string_side;     // iota(sigma), Lie-operator route
  StringParams valuation_side;  // -v(f_sigma), chart route
  bool match() const { return string_side == valuation_side; }
};

MainTheoremCheck verify_main_theorem(const HWModule& module, const WeylWord& word, const DualVector& sigma);
MainTheoremCheck verify_main_theorem(const HWModule& module, const WeylWord& word, const DualVector& sigma,
                                     const std::vector<MultiPoly>& orbit);

struct ExpansionTerm {
  int basis_index;  // index into the leaf-reduced basis of V_{lambda+mu}
  StringParams value;
  Rational coefficient;
};

struct ProductExpansion {
  StringParams expected_leading;  // iota(sigma) + iota(tau)
  std::vector<ExpansionTerm> terms;  // in decreasing value order
  bool leading_additive = false;     // terms[0].value == expected_leading
  bool others_strictly_smaller = false;
  bool ok() const { return leading_additive && others_strictly_smaller; }
};

/// Leaf-reduced dual basis of a module realized as chart polynomials.
struct SectionBasis {
  ValueSet values;
  std::vector<MultiPoly> polys;  // polys[k] = f of values.representatives[k]
};

SectionBasis section_basis(const HWModule& module, const WeylWord& word);

/// Expresses f_sigma f_tau in the leaf-reduced basis of V_{lambda+mu}. Throws ConsistencyError
/// when the product leaves that span.
ProductExpansion expand_product(const HWModule& module_lambda, const HWModule& module_mu,
                                const SectionBasis& basis_sum, const WeylWord& word, const DualVector& sigma,
                                const DualVector& tau);

/// Expansion of an arbitrary polynomial in a section basis by successive leading-term elimination.
std::vector<ExpansionTerm> expand_in_basis(const MultiPoly& f, const SectionBasis& basis);

/// f = sum_gamma chi^gamma (x) f_gamma.
using WeightedFunction = std::map<Weight, MultiPoly>;

struct WeightedValue {
  Weight weight;
  StringParams params;
  friend bool operator==(const WeightedValue&, const WeightedValue&) = default;
  friend auto operator<=>(const WeightedValue&, const WeightedValue&) = default;
};

/// (lambda, -v(f_lambda)) with lambda the lex-smallest weight carrying a nonzero component.
WeightedValue weight_extended_valuation(const WeightedFunction& f);
WeightedFunction multiply(const WeightedFunction& a, const WeightedFunction& b);

}  // namespace strval
