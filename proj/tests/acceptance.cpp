#include "strval.h"
#include "strval/bott_samelson.hpp"
#include "strval/nok.hpp"
#include "strval/sagbi.hpp"
#include "strval/strings.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace strval;

namespace {

struct Case {
  RootSystemSpec spec;
  Weight lambda;
  std::vector<WeylWord> words;
  int level_cap;
  std::int64_t dimension_cap;
};

// Weyl dimension formula written out per type
std::int64_t closed_dim(const RootSystemSpec& s, const Weight& l) {
  const std::int64_t a = l.coords[0], b = s.rank > 1 ? l.coords[1] : 0;
  if (s.family == Family::A && s.rank == 1) return a + 1;
  if (s.family == Family::A && s.rank == 2) return (a + 1) * (b + 1) * (a + b + 2) / 2;
  return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6;
}

std::vector<Case> type_a_cases() {
  std::vector<Case> out;
  const auto a1 = root_system(Family::A, 1), a2 = root_system(Family::A, 2);
  for (int m = 0; m <= 5; ++m) out.push_back({a1, Weight{{m}}, {WeylWord{{1}}}, 2, kDefaultDimensionCap});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      out.push_back({a2, Weight{{a, b}}, {WeylWord{{1, 2, 1}}, WeylWord{{2, 1, 2}}}, 2, kDefaultDimensionCap});
  return out;
}

std::vector<Case> all_cases() {
  auto out = type_a_cases();
  const auto c2 = root_system(Family::C, 2);
  for (const auto& l : {Weight{{1, 0}}, Weight{{0, 1}}}) out.push_back({c2, l, {WeylWord{{1, 2, 1, 2}}}, 3, 300});
  return out;
}

struct Result {
  bool ok = true;
  std::string detail;
};

bool main_theorem_pair(const HWModule& m, const WeylWord& w, const std::vector<MultiPoly>& orbit,
                       const DualVector& sigma) {
  auto lie = string_params(m, w, sigma);
  auto v = highest_term_valuation(matrix_coeff_poly(orbit, sigma));
  std::vector<int> negated;
  for (long x : v.v) negated.push_back(static_cast<int>(-x));
  return lie.a == negated && verify_main_theorem(m, w, sigma, orbit).match();
}

Result criterion_main_theorem() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  int checked = 0, failed = 0;
  for (const auto& c : all_cases()) {
    auto m = build_hw_module(c.spec, c.lambda, c.dimension_cap);
    if (m.dim() != closed_dim(c.spec, c.lambda)) ++failed;
    for (const auto& w : c.words) {
      auto orbit = chart_orbit(m, w);
      for (int j = 0; j < m.dim(); ++j, ++checked)
        if (!main_theorem_pair(m, w, orbit, dual_basis_vector(m, j))) ++failed;
      if (c.spec.family == Family::A && c.spec.rank == 2) {
        for (int r = 0; r < 20; ++r, ++checked) {
          DualVector sigma{RationalVector(m.dim())};
          while (sigma.is_zero())
            for (auto& x : sigma.coords) x = random_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 7, 5);
          if (!main_theorem_pair(m, w, orbit, sigma)) ++failed;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << checked - failed << "/" << checked << " pairs agree in " << secs << " s";
  return {failed == 0 && secs < 60.0, d.str()};
}

Result criterion_lattice_count() {
  int checked = 0, failed = 0;
  for (const auto& c : all_cases()) {
    for (const auto& w : c.words) {
      auto body = string_polytope(c.spec, w, c.lambda, c.level_cap, c.dimension_cap).body;
      ++checked;
      if (lattice_count(body, 1) != static_cast<std::uint64_t>(closed_dim(c.spec, c.lambda))) ++failed;
      long denom = 1;
      for (const auto& v : body.vertices)
        for (const auto& x : v) denom = std::lcm(denom, denominator(x).convert_to<long>());
      for (int k = 2; k <= 3; ++k) {
        ++checked;
        const Weight kl = k * c.lambda;
        const int level = static_cast<int>(denom / std::gcd(denom, static_cast<long>(k)));
        auto scaled = string_polytope(c.spec, w, kl, level, c.dimension_cap).body;
        if (!(scaled == body.scaled(k))) ++failed;
        if (lattice_count(body, k) != static_cast<std::uint64_t>(closed_dim(c.spec, kl))) ++failed;
      }
    }
  }
  return {failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) + " counts and scalings agree"};
}

Result criterion_degree() {
  const auto a2 = root_system(Family::A, 2);
  const Weight l{{1, 1}};
  std::vector<BigInt> hilbert;
  bool ok = true;
  for (int k = 0; k <= 6; ++k) {
    hilbert.emplace_back((k + 1) * (k + 1) * (k + 1));
    ok = ok && weyl_dim(a2, k * l) == (k + 1) * (k + 1) * (k + 1);
  }
  for (const auto& w : {WeylWord{{1, 2, 1}}, WeylWord{{2, 1, 2}}}) {
    auto body = string_polytope(a2, w, l).body;
    auto r = degree_check(hilbert, body);
    ok = ok && r.q == 3 && r.leading_coefficient == 1 && r.volume == 1 && r.degree_from_hilbert == 6 &&
         r.degree_from_volume == 6 && r.match();
  }
  return {ok, "H(k) = (k+1)^3 for k <= 6, volume 1, degree 6 on both words"};
}

Result criterion_tableaux() {
  int checked = 0, failed = 0;
  for (const auto& c : type_a_cases()) {
    auto m = build_hw_module(c.spec, c.lambda);
    auto tableaux = semistandard_tableaux(c.spec, c.lambda);
    for (const auto& w : c.words) {
      ++checked;
      std::set<StringParams> crystal;
      for (const auto& t : tableaux) crystal.insert(tableaux_string_params(c.spec, c.lambda, t, w));
      const auto lie = value_set(m, w).points;
      if (crystal != lie || static_cast<std::int64_t>(tableaux.size()) != closed_dim(c.spec, c.lambda)) ++failed;
    }
  }
  return {failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) + " value sets equal"};
}

Result criterion_axioms() {
  std::mt19937_64 rng(99);
  std::vector<MultiPoly> samples;
  while (samples.size() < 240) {
    auto p = random_poly(rng, 3, 4, 3);
    if (!p.is_zero()) samples.push_back(p);
  }
  auto high = check_prevaluation_axioms(samples, [](const MultiPoly& f) { return highest_term_valuation(f); }, 5);
  auto low = check_prevaluation_axioms(samples, [](const MultiPoly& f) { return lowest_term_valuation(f); }, 5);
  auto terms = check_prevaluation_axioms(
      samples, [](const MultiPoly& f) { return ValVector{{static_cast<long>(f.num_terms())}}; }, 5);
  // lex-largest exponent without negation violates the ultrametric inequality
  auto unnegated = check_prevaluation_axioms(samples, [](const MultiPoly& f) { return -highest_term_valuation(f); }, 5);
  std::ostringstream d;
  d << high.pairs_checked << " pairs; violations highest " << high.violations.size() << ", lowest "
    << low.violations.size() << "; controls flagged " << terms.violations.size() << " and "
    << unnegated.violations.size();
  return {high.ok() && low.ok() && high.pairs_checked >= 200 && !terms.ok() && !unnegated.ok(), d.str()};
}

Result criterion_products() {
  int products = 0, failed = 0;
  auto run = [&](const RootSystemSpec& s, const Weight& l, const Weight& mu, const WeylWord& w) {
    auto ml = build_hw_module(s, l), mm = build_hw_module(s, mu), ms = build_hw_module(s, l + mu);
    auto basis = section_basis(ms, w);
    int local = 0;
    for (const auto& sigma : value_set(ml, w).representatives)
      for (const auto& tau : value_set(mm, w).representatives) {
        auto e = expand_product(ml, mm, basis, w, sigma, tau);
        ++local;
        if (!e.ok() || e.expected_leading != string_params(ml, w, sigma) + string_params(mm, w, tau)) ++failed;
      }
    products += local;
    return local;
  };
  const auto a1 = root_system(Family::A, 1), a2 = root_system(Family::A, 2);
  for (const auto& w : {WeylWord{{1, 2, 1}}, WeylWord{{2, 1, 2}}})
    if (run(a2, Weight{{1, 0}}, Weight{{1, 0}}, w) != 9) ++failed;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n)
      if (run(a1, Weight{{m}}, Weight{{n}}, WeylWord{{1}}) != (m + 1) * (n + 1)) ++failed;
  return {failed == 0, std::to_string(products) + " products expanded, " + std::to_string(failed) + " failures"};
}

Result criterion_sagbi() {
  bool ok = true;
  int reconstructed = 0;
  const auto a1 = root_system(Family::A, 1), a2 = root_system(Family::A, 2);
  std::vector<SectionRingSample> samples = {section_ring_sample(a1, WeylWord{{1}}, Weight{{1}}, 3),
                                            section_ring_sample(a2, WeylWord{{1, 2, 1}}, Weight{{1, 0}}, 3),
                                            section_ring_sample(a2, WeylWord{{2, 1, 2}}, Weight{{1, 0}}, 3)};
  for (const auto& s : samples) {
    const int n = s.spanning[1].front().poly.num_vars();
    for (const auto& level : s.spanning)
      for (const auto& f : level) {
        auto t = subduct(s.algebra, f, s.basis[1]);
        const bool good = t.complete() && t.remainder.poly.is_zero() && replay(t, s.basis[1], n) == f;
        ok = ok && good;
        reconstructed += good;
      }
    auto d = degeneration_family(s.algebra, s.basis);
    ok = ok && d.t0 == semigroup_algebra(basis_semigroup(s.algebra, s.basis));
  }
  const auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  std::vector<AlgebraElement> gens = {{0, x + y}, {0, x * y}};
  auto t = subduct(ValuedAlgebra{}, {0, x * x + y * y}, gens);
  ok = ok && t.complete() && t.steps.size() == 2 && t.steps[0].exponents == std::vector<int>{2, 0} &&
       t.steps[0].scalar == 1 && t.steps[1].exponents == std::vector<int>{0, 1} && t.steps[1].scalar == -2;
  return {ok, std::to_string(reconstructed) + " spanning elements reconstructed; x^2+y^2 = (x+y)^2 - 2xy"};
}

Result criterion_fibered() {
  bool ok = true;
  std::ostringstream d;
  auto check = [&](const IsotypicData& data, const WeylWord& w, const std::function<std::uint64_t(int)>& expected) {
    auto p = fibered_polytope(data, w, 4);
    for (int k = 0; k <= 4; ++k) ok = ok && lattice_count(p, k) == expected(k);
    d << data.name << " ";
  };
  check(a1_toy_datum(4), WeylWord{{1}}, [](int k) { return std::uint64_t((k + 1) * (k + 2) / 2); });
  check(flag_datum(root_system(Family::A, 1), Weight{{1}}, 4), WeylWord{{1}}, [](int k) { return std::uint64_t(k + 1); });
  check(flag_datum(root_system(Family::A, 2), Weight{{1, 1}}, 4), WeylWord{{1, 2, 1}},
        [](int k) { return std::uint64_t((k + 1) * (k + 1) * (k + 1)); });
  d << "match for k <= 4";
  return {ok, d.str()};
}

Result criterion_determinism() {
  auto run = [](std::string& out) {
    char* report = nullptr;
    sv_status s = sv_run("suite", R"({"seed":7})", &report);
    out = report ? report : "";
    sv_free_string(report);
    return s;
  };
  std::string first, second;
  const sv_status a = run(first), b = run(second);
  const bool ok = a == SV_OK && b == SV_OK && !first.empty() && first == second;
  return {ok, std::to_string(first.size()) + " bytes, status " + sv_status_name(a) + "/" + sv_status_name(b)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Result (*)()>> criteria = {
      {"main theorem", criterion_main_theorem},
      {"lattice count equals dimension", criterion_lattice_count},
      {"degree identity", criterion_degree},
      {"tableaux oracle", criterion_tableaux},
      {"valuation axioms", criterion_axioms},
      {"multiplicativity", criterion_products},
      {"subduction and degeneration", criterion_sagbi},
      {"fibered polytope", criterion_fibered},
      {"determinism", criterion_determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Result r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.ok;
    std::printf("%s %zu %s: %s\n", r.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, r.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
