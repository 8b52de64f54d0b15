#include "strval/strings.hpp"

#include "strval/errors.hpp"

#include <algorithm>

namespace strval {

StringParams& StringParams::operator+=(const StringParams& other) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += other.a[k];
  return *this;
}

std::string to_string(const StringParams& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.a[i]);
  }
  return out + ")";
}

StringTrace string_trace(const HWModule& module, const WeylWord& word, const DualVector& sigma) {
  validate_word(module.spec, word);
  if (sigma.is_zero()) throw DomainError("string parameters of the zero functional are undefined");
  StringTrace tr{StringParams{std::vector<int>(word.size(), 0)}, sigma};
  for (std::size_t k = 0; k < word.size(); ++k) {
    for (;;) {
      DualVector next = dual_action_F(module, word[k], tr.terminal);
      if (next.is_zero()) break;
      tr.terminal = std::move(next);
      if (++tr.params.a[k] > module.dim()) throw ConsistencyError("dual F action is not nilpotent");
    }
  }
  return tr;
}

StringParams string_params(const HWModule& module, const WeylWord& word, const DualVector& sigma) {
  return string_trace(module, word, sigma).params;
}

ValueSet value_set(const HWModule& module, const WeylWord& word) {
  validate_word(module.spec, word);
  // Valuation convention: v = -iota, so cancellation strictly raises v.
  LeafSpace<DualVector, ValVector> space;
  space.value = [&](const DualVector& s) {
    StringParams p = string_params(module, word, s);
    ValVector v;
    for (int x : p.a) v.v.push_back(-x);
    return v;
  };
  space.leaf = [&](const DualVector& s) { return string_trace(module, word, s).terminal.coords[module.hw_index]; };
  space.subtract_scaled = [](const DualVector& y, const Rational& c, const DualVector& x) {
    DualVector out = y;
    for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] -= c * x.coords[j];
    return out;
  };
  space.is_zero = [](const DualVector& s) { return s.is_zero(); };

  std::vector<DualVector> basis;
  for (int j = 0; j < module.dim(); ++j) basis.push_back(dual_basis_vector(module, j));
  ValueSet vs;
  vs.lambda = module.lambda;
  vs.representatives = leaf_reduce(std::move(basis), space);
  for (const auto& r : vs.representatives) {
    vs.representative_values.push_back(string_params(module, word, r));
    vs.points.insert(vs.representative_values.back());
  }
  if (static_cast<int>(vs.points.size()) != module.dim())
    throw LeafSeparationError("value set has " + std::to_string(vs.points.size()) + " points, module dimension " +
                              std::to_string(module.dim()));
  return vs;
}

std::set<std::pair<Weight, StringParams>> string_cone_sample(const RootSystemSpec& spec, const WeylWord& word,
                                                             int cap, std::int64_t dimension_cap) {
  if (cap < 0) throw DomainError("degree cap must be nonnegative");
  std::set<std::pair<Weight, StringParams>> out;
  for (const auto& lambda : dominant_weights_up_to(spec, cap)) {
    HWModule m = build_hw_module(spec, lambda, dimension_cap);
    for (const auto& p : value_set(m, word).points) out.emplace(lambda, p);
  }
  return out;
}

std::vector<int> partition_of(const Weight& lambda) {
  std::vector<int> rows(lambda.coords.size(), 0);
  int acc = 0;
  for (int j = static_cast<int>(lambda.coords.size()) - 1; j >= 0; --j) {
    acc += lambda.coords[j];
    rows[j] = acc;
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

void validate_tableau(const RootSystemSpec& spec, const Weight& lambda, const Tableau& t) {
  if (spec.family != Family::A) throw CapabilityError("tableau crystals are implemented for type A only");
  std::vector<int> shape = partition_of(lambda);
  if (t.rows.size() != shape.size()) throw DomainError("tableau shape does not match lambda");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != shape[r]) throw DomainError("tableau shape does not match lambda");
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      int x = t.rows[r][c];
      if (x < 1 || x > spec.rank + 1) throw DomainError("tableau entry out of range");
      if (c > 0 && t.rows[r][c - 1] > x) throw DomainError("tableau rows must weakly increase");
      if (r > 0 && t.rows[r - 1][c] >= x) throw DomainError("tableau columns must strictly increase");
    }
  }
}

std::vector<Tableau> semistandard_tableaux(const RootSystemSpec& spec, const Weight& lambda) {
  if (spec.family != Family::A) throw CapabilityError("tableau crystals are implemented for type A only");
  validate_weight(spec, lambda);
  std::vector<int> shape = partition_of(lambda);
  Tableau t;
  for (int len : shape) t.rows.emplace_back(len, 0);
  std::vector<Tableau> out;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int x = lo; x <= spec.rank + 1; ++x) {
      t.rows[r][c] = x;
      self(self, k + 1);
    }
  };
  fill(fill, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Weight tableau_weight(const RootSystemSpec& spec, const Tableau& t) {
  std::vector<int> content(spec.rank + 2, 0);
  for (const auto& row : t.rows)
    for (int x : row) ++content[x];
  Weight w{std::vector<int>(spec.rank)};
  for (int i = 1; i <= spec.rank; ++i) w.coords[i - 1] = content[i] - content[i + 1];
  return w;
}

namespace {

// Reading word: rows from bottom to top, each left to right. Returns cell coordinates.
std::vector<std::pair<int, int>> reading_cells(const Tableau& t) {
  std::vector<std::pair<int, int>> cells;
  for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
    for (int c = 0; c < static_cast<int>(t.rows[r].size()); ++c) cells.emplace_back(r, c);
  return cells;
}

// Unpaired positions after cancelling every (i+1, i) pair in reading order. The unpaired
// letters read i...i (i+1)...(i+1).
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>> unpaired(const Tableau& t, int i) {
  std::vector<std::pair<int, int>> open_upper;  // unmatched i+1 letters
  std::vector<std::pair<int, int>> lower;       // unmatched i letters
  for (auto cell : reading_cells(t)) {
    int x = t.rows[cell.first][cell.second];
    if (x == i + 1) {
      open_upper.push_back(cell);
    } else if (x == i) {
      if (!open_upper.empty())
        open_upper.pop_back();
      else
        lower.push_back(cell);
    }
  }
  return {lower, open_upper};
}

}  // namespace

std::optional<Tableau> crystal_raise(const Tableau& t, int i) {
  auto [lower, upper] = unpaired(t, i);
  if (upper.empty()) return std::nullopt;
  Tableau out = t;
  out.rows[upper.front().first][upper.front().second] = i;
  return out;
}

std::optional<Tableau> crystal_lower(const Tableau& t, int i) {
  auto [lower, upper] = unpaired(t, i);
  if (lower.empty()) return std::nullopt;
  Tableau out = t;
  out.rows[lower.back().first][lower.back().second] = i + 1;
  return out;
}

StringParams tableaux_string_params(const RootSystemSpec& spec, const Weight& lambda, const Tableau& t,
                                    const WeylWord& word) {
  validate_tableau(spec, lambda, t);
  validate_word(spec, word);
  StringParams p{std::vector<int>(word.size(), 0)};
  Tableau cur = t;
  for (std::size_t k = 0; k < word.size(); ++k) {
    while (auto next = crystal_raise(cur, word[k])) {
      cur = *next;
      ++p.a[k];
    }
  }
  return p;
}

}  // namespace strval
