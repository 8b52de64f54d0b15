#pragma once

#include "strval/errors.hpp"
#include "strval/rational.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace strval {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Q. Terms are kept in lexicographic exponent order
/// (variable 0 most significant); zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int num_vars = 0) : num_vars_(num_vars) {}
  static MultiPoly constant(int num_vars, const Rational& c);
  static MultiPoly monomial(const Exponent& exp, const Rational& c = 1);
  static MultiPoly variable(int num_vars, int var);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& exp) const;

  /// Lex-largest / lex-smallest exponent; throws DomainError on the zero polynomial.
  const Exponent& lex_max_exponent() const;
  const Exponent& lex_min_exponent() const;
  int degree_in(int var) const;

  void add_term(const Exponent& exp, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  MultiPoly pow(int k) const;

  MultiPoly derivative(int var) const;
  /// Sets variable `var` to zero.
  MultiPoly restrict_zero(int var) const;
  /// Reorders variables: new variable k is old variable order[k].
  MultiPoly permuted(const std::vector<int>& order) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int num_vars_;
  std::map<Exponent, Rational> terms_;
};

std::string to_string(const MultiPoly& p);

/// Integer tuple ordered lexicographically; the value group of term valuations.
struct ValVector {
  std::vector<long> v;

  ValVector& operator+=(const ValVector& other);
  friend ValVector operator+(ValVector a, const ValVector& b) { return a += b; }
  friend ValVector operator-(const ValVector& a) {
    ValVector out = a;
    for (auto& x : out.v) x = -x;
    return out;
  }
  friend bool operator==(const ValVector&, const ValVector&) = default;
  friend auto operator<=>(const ValVector&, const ValVector&) = default;
};

std::string to_string(const ValVector& v);

/// Value of the graded extension: (k, x) > (l, y) iff k < l, or k == l and x > y.
struct GradedValue {
  int degree = 0;
  ValVector tail;

  friend GradedValue operator+(const GradedValue& a, const GradedValue& b) {
    return {a.degree + b.degree, a.tail + b.tail};
  }
  friend bool operator==(const GradedValue&, const GradedValue&) = default;
  friend std::strong_ordering operator<=>(const GradedValue& a, const GradedValue& b) {
    if (a.degree != b.degree) return b.degree <=> a.degree;
    return a.tail <=> b.tail;
  }
};

/// Variable priority: order[0] is the most significant variable. Empty means identity.
using VariableOrder = std::vector<int>;

/// (-l_1, ..., -l_d) for the lex-largest exponent l.
ValVector highest_term_valuation(const MultiPoly& f, const VariableOrder& order = {});
/// The lex-smallest exponent itself.
ValVector lowest_term_valuation(const MultiPoly& f, const VariableOrder& order = {});

using PolyValuation = std::function<ValVector(const MultiPoly&)>;

/// Element of a graded algebra whose pieces live in one polynomial ring.
class GradedPoly {
 public:
  GradedPoly() = default;
  static GradedPoly homogeneous(int degree, MultiPoly piece);

  void add_piece(int degree, const MultiPoly& piece);
  bool is_zero() const { return pieces_.empty(); }
  const std::map<int, MultiPoly>& pieces() const { return pieces_; }
  int top_degree() const;

  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);

 private:
  std::map<int, MultiPoly> pieces_;
};

struct GradedPiece {
  int degree;
  MultiPoly element;
};

/// (s, v(f_s)) with s the top degree whose pieces sum to a nonzero element.
GradedValue graded_extension(std::span<const GradedPiece> pieces, const PolyValuation& v);
GradedValue graded_extension(const GradedPoly& f, const PolyValuation& v);

/// A vector space whose valuation has one-dimensional leaves: `leaf` is a coordinate
/// on the leaf of value(x), so y - (leaf(y)/leaf(x)) x strictly raises the value
/// whenever value(x) == value(y).
template <class T, class Value>
struct LeafSpace {
  std::function<Value(const T&)> value;
  std::function<Rational(const T&)> leaf;
  std::function<T(const T& y, const Rational& c, const T& x)> subtract_scaled;  // y - c x
  std::function<bool(const T&)> is_zero;
};

class LeafSeparationError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

/// Turns a linearly independent list into one with pairwise-distinct values spanning the
/// same space. Collisions are resolved in increasing value order; the earliest-indexed
/// vector of a colliding group is the pivot, so each output equals its input plus a
/// combination of earlier-indexed inputs.
template <class T, class Value>
std::vector<T> leaf_reduce(std::vector<T> xs, const LeafSpace<T, Value>& space) {
  std::vector<Value> values;
  values.reserve(xs.size());
  for (const auto& x : xs) {
    if (space.is_zero(x)) throw LeafSeparationError("leaf_reduce: zero vector in input");
    values.push_back(space.value(x));
  }
  for (;;) {
    std::map<Value, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < xs.size(); ++k) groups[values[k]].push_back(k);
    auto it = std::find_if(groups.begin(), groups.end(), [](const auto& g) { return g.second.size() > 1; });
    if (it == groups.end()) break;
    const std::size_t pivot = it->second.front();
    const Rational pivot_leaf = space.leaf(xs[pivot]);
    if (pivot_leaf == 0) throw LeafSeparationError("leaf_reduce: vanishing leaf coordinate");
    for (std::size_t t = 1; t < it->second.size(); ++t) {
      const std::size_t k = it->second[t];
      xs[k] = space.subtract_scaled(xs[k], space.leaf(xs[k]) / pivot_leaf, xs[pivot]);
      if (space.is_zero(xs[k]))
        throw LeafSeparationError("leaf_reduce: input vectors are linearly dependent");
      Value nv = space.value(xs[k]);
      if (!(values[k] < nv))
        throw LeafSeparationError("leaf_reduce: cancellation did not raise the value; leaves are not one-dimensional");
      values[k] = std::move(nv);
    }
  }
  return xs;
}

enum class TermValuation { Highest, Lowest };

/// Leaf reduction of polynomials under a term valuation.
std::vector<MultiPoly> leaf_reduce(std::vector<MultiPoly> polys, TermValuation kind, const VariableOrder& order = {});

struct AxiomReport {
  std::size_t pairs_checked = 0;
  std::size_t combinations_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks v(f+g) >= min, v(cf) = v(f), the sharpened "distinct values => v(f+g) = min",
/// multiplicativity v(fg) = v(f) + v(g), and v(sum c_i f_i) = min v(f_i) on random
/// combinations of distinct-valued samples.
AxiomReport check_prevaluation_axioms(std::span<const MultiPoly> samples, const PolyValuation& v,
                                      std::uint64_t seed = 1, bool check_multiplicativity = true);

/// Deterministic random polynomial with small integer coefficients.
MultiPoly random_poly(std::mt19937_64& rng, int num_vars, int max_terms, int max_exponent);

/// Rational in [-bound, bound] with denominator in [1, den_bound], drawn with plain modular
/// reduction of raw engine output so results are identical across standard libraries.
Rational random_rational(std::mt19937_64& rng, int bound, int den_bound);
int random_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace strval
