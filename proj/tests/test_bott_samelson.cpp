#include <doctest.h>

#include "strval/bott_samelson.hpp"
#include "strval/errors.hpp"

#include <random>

using namespace strval;

namespace {

// Lex-largest exponent by successive differentiation: the order of t_1 first, then
// the order of t_2 in the surviving coefficient, and so on.
std::vector<int> lexmax_by_derivatives(MultiPoly f) {
  std::vector<int> out;
  for (int k = 0; k < f.num_vars(); ++k) {
    int a = 0;
    while (!f.derivative(k).is_zero()) {
      f = f.derivative(k);
      ++a;
    }
    f = f.restrict_zero(k);
    out.push_back(a);
  }
  return out;
}

DualVector random_dual(std::mt19937_64& rng, int dim) {
  DualVector sigma{RationalVector(dim)};
  while (sigma.is_zero())
    for (auto& x : sigma.coords) x = random_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 5, 4);
  return sigma;
}

}  // namespace

TEST_CASE("A2 omega_1 chart polynomials") {
  auto a2 = root_system(Family::A, 2);
  auto m = build_hw_module(a2, Weight{{1, 0}});
  WeylWord w{{1, 2, 1}};
  auto t1 = MultiPoly::variable(3, 0), t2 = MultiPoly::variable(3, 1), t3 = MultiPoly::variable(3, 2);
  std::set<std::vector<int>> exps;
  for (int j = 0; j < 3; ++j) {
    auto f = matrix_coeff_poly(m, w, dual_basis_vector(m, j)).poly;
    CHECK((f == MultiPoly::constant(3, 1) || f == t1 + t3 || f == t2 * t3));
    exps.insert(geometric_valuation(f).a);
  }
  CHECK(exps == std::set<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}});
}

TEST_CASE("main theorem on basis and random functionals") {
  std::mt19937_64 rng(2024);
  auto a1 = root_system(Family::A, 1);
  for (int m = 0; m <= 5; ++m) {
    auto mod = build_hw_module(a1, Weight{{m}});
    for (int j = 0; j < mod.dim(); ++j) CHECK(verify_main_theorem(mod, WeylWord{{1}}, dual_basis_vector(mod, j)).match());
  }
  auto a2 = root_system(Family::A, 2);
  for (const auto& lambda : dominant_weights_up_to(a2, 3)) {
    auto mod = build_hw_module(a2, lambda);
    for (const auto& w : longest_element_words(a2)) {
      auto orbit = chart_orbit(mod, w);
      for (int j = 0; j < mod.dim(); ++j) {
        auto c = verify_main_theorem(mod, w, dual_basis_vector(mod, j), orbit);
        CHECK(c.match());
        CHECK(c.valuation_side.a == lexmax_by_derivatives(matrix_coeff_poly(orbit, dual_basis_vector(mod, j))));
      }
      for (int r = 0; r < 20; ++r) {
        auto sigma = random_dual(rng, mod.dim());
        auto c = verify_main_theorem(mod, w, sigma, orbit);
        CHECK(c.match());
        CHECK(c.valuation_side.a == lexmax_by_derivatives(matrix_coeff_poly(orbit, sigma)));
      }
    }
  }
  auto c2 = root_system(Family::C, 2);
  for (const auto& lambda : {Weight{{1, 0}}, Weight{{0, 1}}, Weight{{1, 1}}}) {
    auto mod = build_hw_module(c2, lambda);
    for (const auto& w : longest_element_words(c2))
      for (int j = 0; j < mod.dim(); ++j) CHECK(verify_main_theorem(mod, w, dual_basis_vector(mod, j)).match());
  }
}

TEST_CASE("chart polynomial at the origin is sigma(v_lambda)") {
  auto a2 = root_system(Family::A, 2);
  auto mod = build_hw_module(a2, Weight{{2, 1}});
  std::mt19937_64 rng(9);
  auto sigma = random_dual(rng, mod.dim());
  auto f = matrix_coeff_poly(mod, WeylWord{{2, 1, 2}}, sigma).poly;
  CHECK(f.coefficient({0, 0, 0}) == sigma.coords[mod.hw_index]);
}

TEST_CASE("products expand with an additive leading term") {
  auto a2 = root_system(Family::A, 2);
  for (const auto& w : longest_element_words(a2)) {
    Weight lambda{{1, 0}};
    auto ml = build_hw_module(a2, lambda);
    auto ms = build_hw_module(a2, lambda + lambda);
    auto basis = section_basis(ms, w);
    auto reps = value_set(ml, w).representatives;
    int count = 0;
    for (const auto& s : reps)
      for (const auto& t : reps) {
        auto e = expand_product(ml, ml, basis, w, s, t);
        CHECK(e.ok());
        ++count;
      }
    CHECK(count == 9);
  }
  auto a1 = root_system(Family::A, 1);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) {
      auto ml = build_hw_module(a1, Weight{{m}});
      auto mm = build_hw_module(a1, Weight{{n}});
      auto basis = section_basis(build_hw_module(a1, Weight{{m + n}}), WeylWord{{1}});
      for (const auto& s : value_set(ml, WeylWord{{1}}).representatives)
        for (const auto& t : value_set(mm, WeylWord{{1}}).representatives)
          CHECK(expand_product(ml, mm, basis, WeylWord{{1}}, s, t).ok());
    }
}

TEST_CASE("expansion outside the span is rejected") {
  auto a1 = root_system(Family::A, 1);
  auto basis = section_basis(build_hw_module(a1, Weight{{1}}), WeylWord{{1}});
  auto t = MultiPoly::variable(1, 0);
  CHECK_THROWS_AS(expand_in_basis(t * t, basis), ConsistencyError);
  auto terms = expand_in_basis(3 * t + MultiPoly::constant(1, 2), basis);
  CHECK(terms.size() == 2);
}

TEST_CASE("weight-extended valuation") {
  auto t = MultiPoly::variable(2, 0), s = MultiPoly::variable(2, 1);
  WeightedFunction f{{Weight{{1, 0}}, t * s}, {Weight{{0, 1}}, t + s}};
  auto v = weight_extended_valuation(f);
  CHECK(v.weight == Weight{{0, 1}});
  CHECK(v.params.a == std::vector<int>{1, 0});
  WeightedFunction g{{Weight{{1, 0}}, s}};
  auto fg = multiply(f, g);
  CHECK(weight_extended_valuation(fg).weight == Weight{{1, 1}});
}
