#pragma once

#include "strval/hwmodule.hpp"
#include "strval/poly.hpp"
#include "strval/rootdata.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace strval {

/// String parameters (a_1, ..., a_N), compared lexicographically.
struct StringParams {
  std::vector<int> a;

  std::size_t size() const { return a.size(); }
  StringParams& operator+=(const StringParams& other);
  friend StringParams operator+(StringParams x, const StringParams& y) { return x += y; }
  friend bool operator==(const StringParams&, const StringParams&) = default;
  friend auto operator<=>(const StringParams&, const StringParams&) = default;
};

std::string to_string(const StringParams& s);

/// Result of the greedy string computation together with its surviving functional.
struct StringTrace {
  StringParams params;
  DualVector terminal;  // F_{i_N}^{a_N} ... F_{i_1}^{a_1} sigma (transposed action)
};

/// a_k = max{a : F_{i_k}^a F_{i_{k-1}}^{a_{k-1}} ... sigma != 0}. Throws DomainError on sigma = 0.
StringTrace string_trace(const HWModule& module, const WeylWord& word, const DualVector& sigma);
StringParams string_params(const HWModule& module, const WeylWord& word, const DualVector& sigma);

struct ValueSet {
  Weight lambda;
  std::set<StringParams> points;
  /// Leaf-reduced dual basis with pairwise-distinct string parameters, in dual-basis order.
  std::vector<DualVector> representatives;
  std::vector<StringParams> representative_values;
};

/// Leaf reduction of the full dual basis; throws LeafSeparationError if values cannot be separated.
ValueSet value_set(const HWModule& module, const WeylWord& word);

/// Union of {(lambda, a) : a in S_lambda} over dominant lambda with coordinate sum <= cap.
std::set<std::pair<Weight, StringParams>> string_cone_sample(const RootSystemSpec& spec, const WeylWord& word,
                                                             int cap, std::int64_t dimension_cap = kDefaultDimensionCap);

/// Semistandard Young tableau for type A_r, entries 1..r+1, rows top to bottom.
struct Tableau {
  std::vector<std::vector<int>> rows;
  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// Row lengths of the Young diagram of lambda: row j has lambda_j + ... + lambda_r boxes.
std::vector<int> partition_of(const Weight& lambda);
void validate_tableau(const RootSystemSpec& spec, const Weight& lambda, const Tableau& t);
std::vector<Tableau> semistandard_tableaux(const RootSystemSpec& spec, const Weight& lambda);
Weight tableau_weight(const RootSystemSpec& spec, const Tableau& t);

/// Kashiwara operators on tableaux via the signature rule on the row reading word. i is 1-based.
std::optional<Tableau> crystal_raise(const Tableau& t, int i);
std::optional<Tableau> crystal_lower(const Tableau& t, int i);

/// String parameters through the crystal route: the dual crystal's lowering operators are the
/// raising operators of the tableau crystal, applied greedily along the word.
StringParams tableaux_string_params(const RootSystemSpec& spec, const Weight& lambda, const Tableau& t,
                                    const WeylWord& word);

}  // namespace strval
