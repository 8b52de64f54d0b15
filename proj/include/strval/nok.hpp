#pragma once

#include "strval/polytope.hpp"
#include "strval/rootdata.hpp"
#include "strval/strings.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace strval {

using LatticePoint = std::vector<std::int64_t>;

/// Graded sample of a value semigroup: level k -> points of S at that level.
struct ValueSemigroup {
  int dim = 0;
  std::map<int, std::set<LatticePoint>> levels;
  std::vector<std::pair<int, LatticePoint>> generators;

  void add(int level, LatticePoint point);
  int max_level() const { return levels.empty() ? -1 : levels.rbegin()->first; }
  std::size_t size() const;
  /// Sums of sampled points that stay within the sampled levels but are missing from the sample.
  std::vector<std::pair<int, LatticePoint>> closure_violations() const;
};

struct NokBody {
  RationalPolytope body;
  int level_cap = 0;
  /// Hull at level_cap equals hull at level_cap - 1.
  bool stabilized = false;
};

/// conv{x / k : (k, x) in S, 1 <= k <= K}. Throws DomainError when no positive level is populated.
NokBody nok_body(const ValueSemigroup& semigroup, int level_cap);

/// {(k, a) : a in S_{k lambda}} for 0 <= k <= K.
ValueSemigroup string_semigroup(const RootSystemSpec& spec, const WeylWord& word, const Weight& lambda, int level_cap,
                                std::int64_t dimension_cap = kDefaultDimensionCap);
NokBody string_polytope(const RootSystemSpec& spec, const WeylWord& word, const Weight& lambda, int level_cap = 2,
                        std::int64_t dimension_cap = kDefaultDimensionCap);

/// Points where the semigroup sample and the lattice points of k * body disagree, for 1 <= k <= max level.
/// Each entry is (level, point, present_in_semigroup).
struct ConeGap {
  int level;
  LatticePoint point;
  bool in_semigroup;
};
std::vector<ConeGap> cone_gaps(const ValueSemigroup& semigroup, const RationalPolytope& body);

struct DegreeReport {
  int q = 0;                       // degree of the Hilbert polynomial = intrinsic dimension of the body
  std::vector<BigInt> hilbert;     // H(0), H(1), ...
  Rational leading_coefficient;    // a_q
  Rational degree_from_hilbert;    // q! a_q
  Rational volume;
  Rational degree_from_volume;     // q! Vol_q
  bool match() const { return degree_from_hilbert == degree_from_volume; }
};
/// Fits a degree-q polynomial through the last q + 1 values and requires every value to lie on it.
/// Throws ConsistencyError on inconsistent Hilbert data, DomainError when too few values are given,
/// CapabilityError for lower-dimensional bodies with q > 0.
DegreeReport degree_check(const std::vector<BigInt>& hilbert, const RationalPolytope& body);

/// Multiplicity-free isotypic data of a graded G-algebra: (level, dominant weight) -> multiplicity.
struct IsotypicData {
  RootSystemSpec spec;
  std::string name;
  std::map<std::pair<int, Weight>, int> multiplicity;
  std::vector<RationalVector> moment_vertices;

  int max_level() const;
  std::vector<Weight> support(int level) const;
  /// Empty when valid: multiplicities in {0,1}, dominant weights, level-k support inside k * moment polytope.
  std::vector<std::string> violations() const;
};

/// R_k = V_{k lambda}^* for 0 <= k <= K.
IsotypicData flag_datum(const RootSystemSpec& spec, const Weight& lambda, int level_cap);
/// A_1 data with support {m omega : 0 <= m <= k} at level k.
IsotypicData a1_toy_datum(int level_cap);

/// Key (level, weight) of the weight valuation. Larger means: smaller level, then larger weight.
struct WeightKey {
  int level = 0;
  Weight weight;
  friend bool operator==(const WeightKey&, const WeightKey&) = default;
};
bool weight_order_less(const WeightKey& a, const WeightKey& b);
/// Maximum of the support in the weight order. Throws DomainError on an empty support.
WeightKey weight_valuation(const std::vector<WeightKey>& support);

/// conv{lambda / k : R_{k, lambda} != 0, 1 <= k <= K}.
RationalPolytope moment_body(const IsotypicData& data, int level_cap);
/// Value semigroup of the weight valuation on the sampled isotypic components.
ValueSemigroup weight_semigroup(const IsotypicData& data, int level_cap);

/// conv{(lambda / k, a / k) : R_{k, lambda} != 0, a in S_lambda, 1 <= k <= K} in weight space x R^N.
RationalPolytope fibered_polytope(const IsotypicData& data, const WeylWord& word, int level_cap,
                                  std::int64_t dimension_cap = kDefaultDimensionCap);
/// sum of dim V_lambda over the level-k support.
std::uint64_t isotypic_dimension(const IsotypicData& data, int level);

}  // namespace strval
