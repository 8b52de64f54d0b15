#include <doctest.h>

#include "strval/poly.hpp"

#include <random>

using namespace strval;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto a = x(2, 0), b = x(2, 1);
  auto p = (a + b) * (a + b) - 2 * (a * b);
  CHECK(p == a * a + b * b);
  CHECK(p.num_terms() == 2);
  CHECK((a - a).is_zero());
  CHECK((a + b).pow(3).coefficient({2, 1}) == 3);
  CHECK(p.derivative(0) == 2 * a);
  CHECK(p.restrict_zero(0) == b * b);
  CHECK(p.degree_in(1) == 2);
  CHECK(to_string(MultiPoly(2)) == "0");
}

TEST_CASE("highest and lowest term valuations") {
  auto a = x(2, 0), b = x(2, 1);
  auto f = a * b + b * b * b + MultiPoly::constant(2, 4);
  CHECK(highest_term_valuation(f) == ValVector{{-1, -1}});
  CHECK(lowest_term_valuation(f) == ValVector{{0, 0}});
  // priority on variable 1
  CHECK(highest_term_valuation(f, {1, 0}) == ValVector{{-3, 0}});
  CHECK(lowest_term_valuation(a * b + a * a, {1, 0}) == ValVector{{0, 2}});
  CHECK_THROWS_AS(highest_term_valuation(MultiPoly(2)), DomainError);
}

TEST_CASE("graded value order") {
  GradedValue low{1, {{-5}}}, high{2, {{0}}};
  CHECK(low > high);  // smaller degree is larger
  CHECK(GradedValue{1, {{0}}} > GradedValue{1, {{-1}}});
  GradedPoly g = GradedPoly::homogeneous(1, x(1, 0));
  g.add_piece(2, x(1, 0) * x(1, 0));
  CHECK(g.top_degree() == 2);
  auto v = graded_extension(g, [](const MultiPoly& f) { return highest_term_valuation(f); });
  CHECK(v.degree == 2);
  CHECK(v.tail == ValVector{{-2}});
}

TEST_CASE("leaf reduction separates values") {
  auto a = x(2, 0), b = x(2, 1);
  std::vector<MultiPoly> polys = {a + b, a + 2 * b, a * b};
  for (auto kind : {TermValuation::Highest, TermValuation::Lowest}) {
    auto reduced = leaf_reduce(polys, kind);
    REQUIRE(reduced.size() == 3);
    std::vector<ValVector> vals;
    for (const auto& p : reduced)
      vals.push_back(kind == TermValuation::Highest ? highest_term_valuation(p) : lowest_term_valuation(p));
    std::sort(vals.begin(), vals.end());
    CHECK(std::adjacent_find(vals.begin(), vals.end()) == vals.end());
  }
  CHECK_THROWS_AS(leaf_reduce({a, 2 * a}, TermValuation::Highest), LeafSeparationError);
}

TEST_CASE("valuation axioms hold on seeded random samples") {
  std::mt19937_64 rng(7);
  std::vector<MultiPoly> samples;
  for (int k = 0; k < 200; ++k) samples.push_back(random_poly(rng, 3, 4, 3));
  auto high = check_prevaluation_axioms(samples, [](const MultiPoly& f) { return highest_term_valuation(f); }, 7);
  auto low = check_prevaluation_axioms(samples, [](const MultiPoly& f) { return lowest_term_valuation(f); }, 7);
  CHECK(high.ok());
  CHECK(low.ok());
  CHECK(high.pairs_checked == 200 * 199 / 2);
  CHECK(high.combinations_checked > 0);
}

TEST_CASE("non-valuations are flagged") {
  std::mt19937_64 rng(3);
  std::vector<MultiPoly> samples;
  for (int k = 0; k < 40; ++k) samples.push_back(random_poly(rng, 2, 4, 2));
  auto terms = check_prevaluation_axioms(
      samples, [](const MultiPoly& f) { return ValVector{{static_cast<long>(f.num_terms())}}; }, 3);
  CHECK_FALSE(terms.ok());
  // Negated total degree fails only the sharpened sum rule, not multiplicativity.
  auto degree = check_prevaluation_axioms(
      samples,
      [](const MultiPoly& f) {
        long d = 0;
        for (const auto& [e, c] : f.terms()) {
          long s = 0;
          for (int v : e) s += v;
          d = std::max(d, s);
        }
        return ValVector{{d}};
      },
      3);
  CHECK_FALSE(degree.ok());
}

TEST_CASE("random helpers are reproducible") {
  std::mt19937_64 a(11), b(11);
  for (int k = 0; k < 20; ++k) CHECK(random_rational(a, 5, 3) == random_rational(b, 5, 3));
  std::mt19937_64 c(1);
  for (int k = 0; k < 100; ++k) {
    int v = random_int(c, -2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
  }
}
