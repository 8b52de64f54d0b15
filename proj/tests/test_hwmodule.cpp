#include <doctest.h>

#include "strval/errors.hpp"
#include "strval/hwmodule.hpp"
#include "strval/poly.hpp"
#include "strval/strings.hpp"

#include <map>
#include <random>

using namespace strval;

namespace {

std::vector<std::pair<RootSystemSpec, Weight>> sample_weights() {
  std::vector<std::pair<RootSystemSpec, Weight>> out;
  auto a1 = root_system(Family::A, 1);
  for (int m = 0; m <= 6; ++m) out.push_back({a1, Weight{{m}}});
  auto a2 = root_system(Family::A, 2);
  for (const auto& w : dominant_weights_up_to(a2, 4)) out.push_back({a2, w});
  auto a3 = root_system(Family::A, 3);
  for (const auto& w : dominant_weights_up_to(a3, 2)) out.push_back({a3, w});
  auto c2 = root_system(Family::C, 2);
  for (const auto& w : dominant_weights_up_to(c2, 3)) out.push_back({c2, w});
  out.push_back({root_system(Family::A, 4), Weight{{0, 1, 0, 0}}});
  return out;
}

}  // namespace

TEST_CASE("defining representations satisfy the Chevalley relations") {
  for (auto [f, r] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::C, 2}}) {
    auto rep = build_defining_rep(root_system(f, r));
    CHECK(rep.relation_violations().empty());
    CHECK(rep.dim == (f == Family::A ? r + 1 : 2 * r));
  }
}

TEST_CASE("tensor and exterior powers stay representations") {
  auto def = build_defining_rep(root_system(Family::C, 2));
  auto sq = exterior_power(def, 2);
  CHECK(sq.dim == 6);
  CHECK(sq.relation_violations().empty());
  auto t = tensor_product(def, def);
  CHECK(t.dim == 16);
  CHECK(t.relation_violations().empty());
}

TEST_CASE("V_lambda has the Weyl dimension and is a highest weight module") {
  for (const auto& [spec, lambda] : sample_weights()) {
    CAPTURE(to_string(lambda));
    auto m = build_hw_module(spec, lambda);
    CHECK(m.dim() == weyl_dim(spec, lambda));
    CHECK(m.basis_weights[m.hw_index] == lambda);
    for (int i = 0; i < spec.rank; ++i) CHECK(m.op_E[i].col(m.hw_index).empty());
    CHECK(m.as_rep().relation_violations().empty());
  }
}

TEST_CASE("C2 fundamental modules") {
  auto c2 = root_system(Family::C, 2);
  CHECK(build_hw_module(c2, Weight{{1, 0}}).dim() == 4);
  CHECK(build_hw_module(c2, Weight{{0, 1}}).dim() == 5);
}

TEST_CASE("type A weights match tableau weights") {
  for (auto r : {1, 2, 3}) {
    auto spec = root_system(Family::A, r);
    for (const auto& lambda : dominant_weights_up_to(spec, 3 - (r == 3))) {
      auto m = build_hw_module(spec, lambda);
      std::map<Weight, int> lie, tab;
      for (const auto& w : m.basis_weights) ++lie[w];
      for (const auto& t : semistandard_tableaux(spec, lambda)) ++tab[tableau_weight(spec, t)];
      CHECK(lie == tab);
    }
  }
}

TEST_CASE("C2 characters are Weyl invariant") {
  auto c2 = root_system(Family::C, 2);
  for (const auto& lambda : dominant_weights_up_to(c2, 3)) {
    auto m = build_hw_module(c2, lambda);
    std::map<Weight, int> mult;
    for (const auto& w : m.basis_weights) ++mult[w];
    for (int i = 1; i <= 2; ++i)
      for (const auto& [w, k] : mult) CHECK(mult[reflect(c2, i, w)] == k);
  }
}

TEST_CASE("dual action is the transpose") {
  auto a2 = root_system(Family::A, 2);
  auto m = build_hw_module(a2, Weight{{2, 1}});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    DualVector sigma{RationalVector(m.dim())};
    RationalVector v(m.dim());
    for (auto& x : sigma.coords) x = random_rational(rng, 4, 3);
    for (auto& x : v) x = random_rational(rng, 4, 3);
    for (int i = 1; i <= 2; ++i) CHECK(pair(dual_action_F(m, i, sigma), v) == pair(sigma, m.op_F[i - 1].apply_dense(v)));
  }
}

TEST_CASE("invalid weights and caps") {
  auto a2 = root_system(Family::A, 2);
  CHECK_THROWS_AS(build_hw_module(a2, Weight{{-1, 1}}), DomainError);
  CHECK_THROWS_AS(build_hw_module(a2, Weight{{1}}), DomainError);
  CHECK_THROWS_AS(build_hw_module(a2, Weight{{9, 9}}), CapabilityError);
  CHECK(build_hw_module(a2, Weight{{9, 9}}, 1000).dim() == 1000);
}
