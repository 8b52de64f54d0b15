#include <doctest.h>

#include "strval/errors.hpp"
#include "strval/nok.hpp"

using namespace strval;

namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

ValueSemigroup cone_sample(int top) {
  ValueSemigroup s;
  s.dim = 1;
  for (int k = 0; k <= top; ++k)
    for (int a = 0; a <= 2 * k; ++a) s.add(k, {a});
  return s;
}

}  // namespace

TEST_CASE("nok body of a cone slice") {
  auto body = nok_body(cone_sample(3), 3);
  CHECK(body.body.vertices == std::vector<RationalVector>{rv({0}), rv({2})});
  CHECK(body.stabilized);
  CHECK(cone_sample(3).closure_violations().empty());
  CHECK(cone_gaps(cone_sample(3), body.body).empty());
}

TEST_CASE("nok body edge cases") {
  ValueSemigroup single;
  single.dim = 2;
  single.add(1, {3, 4});
  auto body = nok_body(single, 1);
  CHECK(body.body.dim == 0);
  CHECK(body.body.vertices == std::vector<RationalVector>{rv({3, 4})});
  CHECK_FALSE(body.stabilized);
  ValueSemigroup empty;
  empty.dim = 1;
  empty.add(0, {0});
  CHECK_THROWS_AS(nok_body(empty, 3), DomainError);
  CHECK_THROWS_AS(single.add(1, {1}), DomainError);
  // (1,1) + (1,1) = (2,2) missing
  ValueSemigroup gap;
  gap.dim = 1;
  gap.add(1, {1});
  gap.add(2, {1});
  CHECK(gap.closure_violations().size() == 1);
}

TEST_CASE("A1 string polytopes") {
  auto a1 = root_system(Family::A, 1);
  for (int m = 0; m <= 5; ++m) {
    auto body = string_polytope(a1, WeylWord{{1}}, Weight{{m}}, 2);
    CHECK(body.body.vertices.front() == rv({0}));
    CHECK(body.body.vertices.back() == rv({m}));
    CHECK(lattice_count(body.body) == static_cast<std::uint64_t>(m + 1));
    CHECK(body.stabilized);
  }
}

TEST_CASE("A2 string polytopes count weyl dimensions and scale") {
  auto a2 = root_system(Family::A, 2);
  for (const auto& w : longest_element_words(a2)) {
    for (const auto& lambda : dominant_weights_up_to(a2, 3)) {
      CAPTURE(to_string(lambda));
      auto semigroup = string_semigroup(a2, w, lambda, 2);
      auto body = nok_body(semigroup, 2);
      CHECK(body.stabilized);
      CHECK(semigroup.closure_violations().empty());
      CHECK(cone_gaps(semigroup, body.body).empty());
      CHECK(lattice_count(body.body) == static_cast<std::uint64_t>(weyl_dim(a2, lambda)));
      for (int k = 2; k <= 3; ++k) {
        CHECK(lattice_count(body.body, k) == static_cast<std::uint64_t>(weyl_dim(a2, k * lambda)));
        CHECK(string_polytope(a2, w, k * lambda, 1).body == body.body.scaled(k));
      }
    }
  }
  auto d = string_polytope(a2, WeylWord{{1, 2, 1}}, Weight{{1, 1}}).body;
  CHECK(lattice_count(d) == 8);
  CHECK(volume(d).volume == 1);
  for (int k = 0; k <= 4; ++k) CHECK(lattice_count(d, k) == static_cast<std::uint64_t>((k + 1) * (k + 1) * (k + 1)));
  CHECK(lattice_count(string_polytope(a2, WeylWord{{1, 2, 1}}, Weight{{1, 0}}).body) == 3);
}

TEST_CASE("C2 string polytopes") {
  auto c2 = root_system(Family::C, 2);
  for (const auto& w : longest_element_words(c2)) {
    for (const auto& lambda : {Weight{{1, 0}}, Weight{{0, 1}}, Weight{{1, 1}}}) {
      auto semigroup = string_semigroup(c2, w, lambda, 3, 300);
      auto body = nok_body(semigroup, 3);
      CHECK(body.stabilized);
      CHECK(cone_gaps(semigroup, body.body).empty());
      CHECK(lattice_count(body.body) == static_cast<std::uint64_t>(weyl_dim(c2, lambda)));
    }
  }
  // a half-integral vertex appears for this word, so the level-1 hull is too small
  auto level2 = string_polytope(c2, WeylWord{{1, 2, 1, 2}}, Weight{{1, 0}}, 2);
  CHECK_FALSE(level2.stabilized);
  bool half = false;
  for (const auto& v : level2.body.vertices)
    for (const auto& x : v) half = half || !is_integer(x);
  CHECK(half);
}

TEST_CASE("string polytope errors") {
  auto a2 = root_system(Family::A, 2);
  CHECK_THROWS_AS(string_polytope(a2, WeylWord{{1, 2, 1}}, Weight{{5, 5}}, 2), CapabilityError);
  CHECK_THROWS_AS(string_polytope(a2, WeylWord{{1, 2, 1}}, Weight{{-1, 0}}, 2), DomainError);
  CHECK_THROWS_AS(string_polytope(a2, WeylWord{{1, 3, 1}}, Weight{{1, 0}}, 2), DomainError);
}

TEST_CASE("degree checks") {
  auto a1 = root_system(Family::A, 1);
  auto seg = string_polytope(a1, WeylWord{{1}}, Weight{{1}}).body;
  std::vector<BigInt> h1;
  for (int k = 0; k < 5; ++k) h1.emplace_back(k + 1);
  auto r1 = degree_check(h1, seg);
  CHECK(r1.q == 1);
  CHECK(r1.degree_from_hilbert == 1);
  CHECK(r1.match());

  auto a2 = root_system(Family::A, 2);
  auto d = string_polytope(a2, WeylWord{{1, 2, 1}}, Weight{{1, 1}}).body;
  std::vector<BigInt> h;
  for (int k = 0; k <= 6; ++k) h.emplace_back(weyl_dim(a2, k * Weight{{1, 1}}));
  auto r = degree_check(h, d);
  CHECK(r.leading_coefficient == 1);
  CHECK(r.degree_from_hilbert == 6);
  CHECK(r.degree_from_volume == 6);

  auto point = convex_hull({rv({0})}, 1);
  auto r0 = degree_check({BigInt(1), BigInt(1), BigInt(1)}, point);
  CHECK(r0.q == 0);
  CHECK(r0.match());

  h[2] += 1;
  CHECK_THROWS_AS(degree_check(h, d), ConsistencyError);
  CHECK_THROWS_AS(degree_check({BigInt(1), BigInt(8)}, d), DomainError);
}

TEST_CASE("weight valuation order") {
  auto w1 = Weight{{1, 0}}, w2 = Weight{{0, 1}};
  CHECK(weight_valuation({{1, w1}}) == WeightKey{1, w1});
  CHECK(weight_valuation({{1, w1}, {1, w2}}) == WeightKey{1, w1});
  CHECK(weight_valuation({{2, Weight{{2, 2}}}, {1, w2}}) == WeightKey{1, w2});
  CHECK_THROWS_AS(weight_valuation({}), DomainError);
}

TEST_CASE("moment bodies") {
  auto a2 = root_system(Family::A, 2);
  auto flag = flag_datum(a2, Weight{{1, 1}}, 3);
  CHECK(flag.violations().empty());
  auto m = moment_body(flag, 3);
  CHECK(m.vertices == std::vector<RationalVector>{rv({1, 1})});
  CHECK(nok_body(weight_semigroup(flag, 3), 3).body == m);

  IsotypicData seg;
  seg.spec = a2;
  for (int k = 0; k <= 3; ++k)
    for (int a = 0; a <= k; ++a) seg.multiplicity[{k, Weight{{a, k - a}}}] = 1;
  seg.moment_vertices = {rv({1, 0}), rv({0, 1})};
  CHECK(seg.violations().empty());
  auto ms = moment_body(seg, 3);
  CHECK(ms.vertices == std::vector<RationalVector>{rv({0, 1}), rv({1, 0})});
  CHECK(nok_body(weight_semigroup(seg, 3), 3).body == ms);

  IsotypicData level0;
  level0.spec = a2;
  level0.multiplicity[{0, Weight{{0, 0}}}] = 1;
  CHECK_THROWS_AS(moment_body(level0, 3), DomainError);

  IsotypicData bad = seg;
  bad.multiplicity[{1, Weight{{1, 1}}}] = 2;
  CHECK(bad.violations().size() == 2);  // multiplicity and outside the moment polytope
}

TEST_CASE("fibered polytopes count isotypic dimensions") {
  auto toy = a1_toy_datum(4);
  auto p = fibered_polytope(toy, WeylWord{{1}}, 4);
  CHECK(p.vertices == std::vector<RationalVector>{rv({0, 0}), rv({1, 0}), rv({1, 1})});
  for (int k = 0; k <= 4; ++k) {
    std::uint64_t direct = 0;
    for (int m = 0; m <= k; ++m) direct += m + 1;
    CHECK(lattice_count(p, k) == direct);
    CHECK(isotypic_dimension(toy, k) == direct);
  }
  std::vector<BigInt> h;
  for (int k = 0; k <= 5; ++k) h.emplace_back((k + 1) * (k + 2) / 2);
  CHECK(degree_check(h, p).match());

  auto a2 = root_system(Family::A, 2);
  Weight lambda{{1, 1}};
  auto flag = flag_datum(a2, lambda, 4);
  auto q = fibered_polytope(flag, WeylWord{{1, 2, 1}}, 4);
  auto fibre = string_polytope(a2, WeylWord{{1, 2, 1}}, lambda).body;
  CHECK(q.dim == fibre.dim);
  for (const auto& v : q.vertices) {
    CHECK(v[0] == 1);
    CHECK(v[1] == 1);
  }
  for (int k = 0; k <= 4; ++k)
    CHECK(lattice_count(q, k) == static_cast<std::uint64_t>(weyl_dim(a2, k * lambda)));

  IsotypicData empty;
  empty.spec = a2;
  CHECK_THROWS_AS(fibered_polytope(empty, WeylWord{{1, 2, 1}}, 2), DomainError);
}
