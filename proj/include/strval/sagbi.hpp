#pragma once

#include "strval/nok.hpp"
#include "strval/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strval {

/// Polynomial model of a valued algebra: elements are polynomials, optionally tagged with a degree,
/// valued by a term valuation (extended to degrees by the graded rule when `graded`).
struct ValuedAlgebra {
  TermValuation kind = TermValuation::Highest;
  VariableOrder order;
  bool graded = false;
};

struct AlgebraElement {
  int degree = 0;
  MultiPoly poly;
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return {a.degree + b.degree, a.poly * b.poly};
  }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Exponent of the term carrying the value (in priority coordinates), prefixed by the degree when graded.
LatticePoint value_key(const ValuedAlgebra& alg, const AlgebraElement& f);
Rational leading_coefficient(const ValuedAlgebra& alg, const AlgebraElement& f);
GradedValue element_value(const ValuedAlgebra& alg, const AlgebraElement& f);

/// Lexicographically largest d >= 0 with sum d_i gens_i = target, or nullopt.
std::optional<std::vector<int>> semigroup_decomposition(const std::vector<LatticePoint>& gens,
                                                        const LatticePoint& target);

enum class SubductionStatus { Complete, NotRepresentable, StepCapExceeded };
std::string to_string(SubductionStatus s);

struct SubductionStep {
  std::vector<int> exponents;  // monomial prod f_i^{d_i}
  Rational scalar;
  GradedValue value;           // value of the element before this step
};

struct SubductionTrace {
  std::vector<SubductionStep> steps;
  SubductionStatus status = SubductionStatus::Complete;
  AlgebraElement remainder;
  std::optional<GradedValue> witness;  // unrepresentable value
  bool complete() const { return status == SubductionStatus::Complete; }
};

inline constexpr int kDefaultSubductionStepCap = 64;

/// Rewrites h as a polynomial in the generators by repeated leaf cancellation. Throws DomainError for
/// generators with zero key and ConsistencyError if a cancellation fails to raise the value.
SubductionTrace subduct(const ValuedAlgebra& alg, const AlgebraElement& h, const std::vector<AlgebraElement>& gens,
                        int step_cap = kDefaultSubductionStepCap);
/// sum scalar * prod gens^d + remainder.
AlgebraElement replay(const SubductionTrace& trace, const std::vector<AlgebraElement>& gens, int num_vars);

struct SagbiReport {
  std::size_t values_checked = 0;
  std::size_t elements_subducted = 0;
  std::optional<GradedValue> witness;
  std::string reason;
  bool ok() const { return !witness.has_value(); }
};

/// Checks that every value of the sample lies in the semigroup generated by the generator values and that
/// subduction succeeds on every sample element.
SagbiReport is_sagbi(const ValuedAlgebra& alg, const std::vector<AlgebraElement>& gens,
                     const std::vector<AlgebraElement>& sample);

/// Greedy minimal generating set of the sampled semigroup, scanning points by level.
std::vector<std::pair<int, LatticePoint>> minimal_generators(const ValueSemigroup& s);

/// Structure constants on a basis indexed by (level, point).
struct MultiplicationTable {
  std::vector<std::pair<int, LatticePoint>> basis;
  struct Entry {
    int left = 0, right = 0;
    std::vector<std::pair<int, Rational>> product;  // (basis index, coefficient)
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;  // left <= right, level sum within range
  friend bool operator==(const MultiplicationTable&, const MultiplicationTable&) = default;
  int index_of(int level, const LatticePoint& p) const;
};

/// Table of the semigroup algebra: t^a t^b = t^{a+b}. Throws ConsistencyError if the sample is not closed.
MultiplicationTable semigroup_algebra(const ValueSemigroup& s);
/// Triples (i, j, k) in range with (e_i e_j) e_k != e_i (e_j e_k).
std::vector<std::vector<int>> associativity_violations(const MultiplicationTable& t);

struct DegenerationTerm {
  int basis_index = 0;
  Rational coefficient;
  ValVector gap;  // value(term) - value(leading); zero for the leading term
};

struct DegenerationProduct {
  int left = 0, right = 0;
  std::vector<DegenerationTerm> terms;  // leading term first
};

struct DegenerationReport {
  std::vector<std::pair<int, LatticePoint>> basis;
  std::vector<AlgebraElement> elements;  // normalized to leading coefficient 1
  std::vector<DegenerationProduct> products;
  MultiplicationTable t0;  // leading terms only
  MultiplicationTable t1;  // full expansions
};

/// Expands products of a leaf-reduced graded basis (levels 0..K, pairwise distinct keys per level) in the
/// basis itself. Throws ConsistencyError on a product outside the sampled span or with non-additive value.
DegenerationReport degeneration_family(const ValuedAlgebra& alg, const std::vector<std::vector<AlgebraElement>>& levels);

/// Section ring R(L_lambda) in the Bott-Samelson chart through level K: level k spanned by f_sigma,
/// sigma in V_{k lambda}^*.
struct SectionRingSample {
  ValuedAlgebra algebra{TermValuation::Highest, {}, true};
  std::vector<std::vector<AlgebraElement>> spanning;  // dual basis images per level
  std::vector<std::vector<AlgebraElement>> basis;     // leaf-reduced per level
};
SectionRingSample section_ring_sample(const RootSystemSpec& spec, const WeylWord& word, const Weight& lambda,
                                      int level_cap, std::int64_t dimension_cap = kDefaultDimensionCap);
/// Value semigroup of a graded basis sample: (degree, exponent part of the key).
ValueSemigroup basis_semigroup(const ValuedAlgebra& alg, const std::vector<std::vector<AlgebraElement>>& levels);

}  // namespace strval
