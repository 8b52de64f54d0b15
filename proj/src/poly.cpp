#include "strval/poly.hpp"

#include <algorithm>
#include <numeric>

namespace strval {

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(const Exponent& exp, const Rational& c) {
  MultiPoly p(static_cast<int>(exp.size()));
  p.add_term(exp, c);
  return p;
}

MultiPoly MultiPoly::variable(int num_vars, int var) {
  Exponent e(num_vars, 0);
  e[var] = 1;
  return monomial(e);
}

Rational MultiPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponent& MultiPoly::lex_max_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Exponent& MultiPoly::lex_min_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no trailing term");
  return terms_.begin()->first;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MultiPoly::add_term(const Exponent& exp, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(exp.size()) != num_vars_) throw DomainError("exponent length does not match variable count");
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (num_vars_ == 0 && terms_.empty()) num_vars_ = other.num_vars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (num_vars_ == 0 && terms_.empty()) num_vars_ = other.num_vars_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.num_vars_, b.num_vars_));
  Exponent e(out.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < out.num_vars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly out(a.num_vars_);
  if (c == 0) return out;
  out.terms_ = a.terms_;
  for (auto& [e, x] : out.terms_) x *= c;
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly out = constant(num_vars_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::restrict_zero(int var) const {
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& order) const {
  if (order.empty()) return *this;
  MultiPoly out(num_vars_);
  Exponent d(num_vars_);
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k < num_vars_; ++k) d[k] = e[order[k]];
    out.add_term(d, c);
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")";
    for (int k = 0; k < p.num_vars(); ++k) {
      if (it->first[k] == 0) continue;
      out += "*t" + std::to_string(k + 1);
      if (it->first[k] > 1) out += "^" + std::to_string(it->first[k]);
    }
  }
  return out;
}

ValVector& ValVector::operator+=(const ValVector& other) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.v[i];
  return *this;
}

std::string to_string(const ValVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.v[i]);
  }
  return out + ")";
}

ValVector highest_term_valuation(const MultiPoly& f, const VariableOrder& order) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial is undefined");
  const MultiPoly p = f.permuted(order);
  const Exponent& e = p.lex_max_exponent();
  ValVector out;
  for (int x : e) out.v.push_back(-x);
  return out;
}

ValVector lowest_term_valuation(const MultiPoly& f, const VariableOrder& order) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial is undefined");
  const MultiPoly p = f.permuted(order);
  const Exponent& e = p.lex_min_exponent();
  return ValVector{std::vector<long>(e.begin(), e.end())};
}

GradedPoly GradedPoly::homogeneous(int degree, MultiPoly piece) {
  GradedPoly g;
  g.add_piece(degree, piece);
  return g;
}

void GradedPoly::add_piece(int degree, const MultiPoly& piece) {
  auto it = pieces_.find(degree);
  if (it == pieces_.end()) {
    if (!piece.is_zero()) pieces_.emplace(degree, piece);
    return;
  }
  it->second += piece;
  if (it->second.is_zero()) pieces_.erase(it);
}

int GradedPoly::top_degree() const {
  if (pieces_.empty()) throw DomainError("zero graded element has no top degree");
  return pieces_.rbegin()->first;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out;
  for (const auto& [da, pa] : a.pieces_)
    for (const auto& [db, pb] : b.pieces_) out.add_piece(da + db, pa * pb);
  return out;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out = a;
  for (const auto& [d, p] : b.pieces_) out.add_piece(d, p);
  return out;
}

GradedValue graded_extension(std::span<const GradedPiece> pieces, const PolyValuation& v) {
  GradedPoly g;
  for (const auto& p : pieces) g.add_piece(p.degree, p.element);
  if (g.is_zero()) throw DomainError("graded extension of the zero element is undefined");
  return graded_extension(g, v);
}

GradedValue graded_extension(const GradedPoly& f, const PolyValuation& v) {
  const int s = f.top_degree();
  return GradedValue{s, v(f.pieces().at(s))};
}

std::vector<MultiPoly> leaf_reduce(std::vector<MultiPoly> polys, TermValuation kind, const VariableOrder& order) {
  LeafSpace<MultiPoly, ValVector> space;
  if (kind == TermValuation::Highest) {
    space.value = [&order](const MultiPoly& p) { return highest_term_valuation(p, order); };
    space.leaf = [&order](const MultiPoly& p) { return p.permuted(order).terms().rbegin()->second; };
  } else {
    space.value = [&order](const MultiPoly& p) { return lowest_term_valuation(p, order); };
    space.leaf = [&order](const MultiPoly& p) { return p.permuted(order).terms().begin()->second; };
  }
  space.subtract_scaled = [](const MultiPoly& y, const Rational& c, const MultiPoly& x) { return y - c * x; };
  space.is_zero = [](const MultiPoly& p) { return p.is_zero(); };
  return leaf_reduce(std::move(polys), space);
}

int random_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Rational random_rational(std::mt19937_64& rng, int bound, int den_bound) {
  int num = random_int(rng, -bound, bound);
  int den = random_int(rng, 1, den_bound);
  return Rational(num, den);
}

MultiPoly random_poly(std::mt19937_64& rng, int num_vars, int max_terms, int max_exponent) {
  MultiPoly p(num_vars);
  while (p.is_zero()) {
    const int terms = random_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      Exponent e(num_vars);
      for (auto& x : e) x = random_int(rng, 0, max_exponent);
      int c = random_int(rng, -5, 5);
      p.add_term(e, c);
    }
  }
  return p;
}

AxiomReport check_prevaluation_axioms(std::span<const MultiPoly> samples, const PolyValuation& v,
                                      std::uint64_t seed, bool check_multiplicativity) {
  AxiomReport rep;
  std::vector<ValVector> vals;
  for (const auto& f : samples) vals.push_back(v(f));
  auto fail = [&](const std::string& what, std::size_t i, std::size_t j) {
    rep.violations.push_back(what + " at samples " + std::to_string(i) + "," + std::to_string(j));
  };
  const Rational scalars[] = {Rational(1), Rational(2), Rational(-3, 7)};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (const auto& c : scalars)
      if (!(v(c * samples[i]) == vals[i])) fail("scalar axiom v(cf) = v(f) (c=" + to_string(c) + ")", i, i);
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      ++rep.pairs_checked;
      const ValVector& m = std::min(vals[i], vals[j]);
      for (int sign : {1, -1}) {
        MultiPoly s = sign > 0 ? samples[i] + samples[j] : samples[i] - samples[j];
        if (s.is_zero()) continue;
        ValVector vs = v(s);
        if (vs < m) fail("ultrametric v(f+g) >= min", i, j);
        if (vals[i] != vals[j] && vs != m) fail("distinct values v(f+g) = min", i, j);
      }
      if (check_multiplicativity && !(v(samples[i] * samples[j]) == vals[i] + vals[j]))
        fail("multiplicativity v(fg) = v(f)+v(g)", i, j);
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t round = 0; round < samples.size() && samples.size() >= 2; ++round) {
    const int want = random_int(rng, 2, 4);
    std::vector<std::size_t> chosen;
    std::vector<ValVector> seen;
    for (int tries = 0; tries < 16 && static_cast<int>(chosen.size()) < want; ++tries) {
      auto k = static_cast<std::size_t>(random_int(rng, 0, static_cast<int>(samples.size()) - 1));
      if (std::find(seen.begin(), seen.end(), vals[k]) != seen.end()) continue;
      chosen.push_back(k);
      seen.push_back(vals[k]);
    }
    if (chosen.size() < 2) continue;
    ++rep.combinations_checked;
    MultiPoly sum(samples[0].num_vars());
    for (auto k : chosen) {
      Rational c = 0;
      while (c == 0) c = random_rational(rng, 5, 3);
      sum += c * samples[k];
    }
    if (sum.is_zero() || v(sum) != *std::min_element(seen.begin(), seen.end()))
      fail("combination of distinct values has value min", chosen[0], chosen[1]);
  }
  return rep;
}

}  // namespace strval
