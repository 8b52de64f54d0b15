#include <doctest.h>

#include "strval/errors.hpp"
#include "strval/rootdata.hpp"

#include <algorithm>
#include <functional>

using namespace strval;

namespace {

// Independent oracle: apply simple reflections to rho using the Cartan matrix directly.
// A word of length N is a reduced word for w0 iff it sends rho to -rho.
bool sends_rho_to_minus_rho(const RootSystemSpec& s, const std::vector<int>& word) {
  std::vector<int> mu(s.rank, 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it - 1;
    const int pairing = mu[i];
    for (int j = 0; j < s.rank; ++j) mu[j] -= pairing * s.cartan[j][i];
  }
  return std::all_of(mu.begin(), mu.end(), [](int x) { return x == -1; });
}

std::vector<std::vector<int>> brute_force_w0_words(const RootSystemSpec& s) {
  std::vector<std::vector<int>> out;
  std::vector<int> w;
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == s.num_positive_roots) {
      if (sends_rho_to_minus_rho(s, w)) out.push_back(w);
      return;
    }
    for (int i = 1; i <= s.rank; ++i) {
      if (!w.empty() && w.back() == i) continue;
      w.push_back(i);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("supported root systems") {
  CHECK(root_system(Family::A, 1).num_positive_roots == 1);
  CHECK(root_system(Family::A, 2).num_positive_roots == 3);
  CHECK(root_system(Family::A, 3).num_positive_roots == 6);
  CHECK(root_system(Family::A, 4).num_positive_roots == 10);
  CHECK(root_system(Family::C, 2).num_positive_roots == 4);
  CHECK_THROWS_AS(root_system(Family::A, 5), CapabilityError);
  CHECK_THROWS_AS(root_system(Family::C, 3), CapabilityError);
  CHECK_THROWS_AS(root_system(Family::A, 0), CapabilityError);
  CHECK_THROWS(parse_family("B"));
}

TEST_CASE("Cartan conventions") {
  auto a2 = root_system(Family::A, 2);
  CHECK(a2.cartan == IntMatrix{{2, -1}, {-1, 2}});
  auto c2 = root_system(Family::C, 2);
  CHECK(c2.cartan == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(simple_root(c2, 1) == Weight{{2, -1}});
  CHECK(simple_root(c2, 2) == Weight{{-2, 2}});
  CHECK(reflect(a2, 1, Weight{{1, 0}}) == Weight{{-1, 1}});
}

TEST_CASE("reduced words of w0 agree with a brute-force oracle") {
  for (auto [f, r] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::C, 2}}) {
    auto s = root_system(f, r);
    std::vector<std::vector<int>> ours;
    for (const auto& w : longest_element_words(s)) {
      ours.push_back(w.indices);
      CHECK(is_reduced(s, w));
      CHECK(WeylElement::from_word(s, w).is_longest());
    }
    auto oracle = brute_force_w0_words(s);
    std::sort(oracle.begin(), oracle.end());
    CHECK(ours == oracle);
  }
  CHECK(longest_element_words(root_system(Family::A, 2)).size() == 2);
  CHECK(longest_element_words(root_system(Family::A, 3)).size() == 16);
  CHECK(longest_element_words(root_system(Family::C, 2)).size() == 2);
}

TEST_CASE("Weyl length and reducedness") {
  auto a2 = root_system(Family::A, 2);
  CHECK(weyl_length(a2, WeylWord{{1, 1}}) == 0);
  CHECK(weyl_length(a2, WeylWord{{1, 2}}) == 2);
  CHECK_FALSE(is_reduced(a2, WeylWord{{1, 2, 1, 2}}));
  CHECK(WeylElement::from_word(a2, WeylWord{{1, 2, 1}}) == WeylElement::from_word(a2, WeylWord{{2, 1, 2}}));
  CHECK_THROWS_AS(validate_word(a2, WeylWord{{1, 9}}), DomainError);
  CHECK_THROWS_AS(suffix_elements(a2, WeylWord{{1, 2}}), DomainError);
}

TEST_CASE("weyl_dim against closed forms") {
  auto a1 = root_system(Family::A, 1);
  for (int m = 0; m <= 6; ++m) CHECK(weyl_dim(a1, Weight{{m}}) == m + 1);
  auto a2 = root_system(Family::A, 2);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) CHECK(weyl_dim(a2, Weight{{a, b}}) == (a + 1) * (b + 1) * (a + b + 2) / 2);
  auto c2 = root_system(Family::C, 2);
  // dim V(a,b) for Sp4 with omega_1 defining: (a+1)(b+1)(a+b+2)(a+2b+3)/6
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      CHECK(weyl_dim(c2, Weight{{a, b}}) == (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6);
  CHECK(weyl_dim(root_system(Family::A, 3), Weight{{0, 1, 0}}) == 6);
  CHECK(weyl_dim(root_system(Family::A, 4), Weight{{1, 0, 0, 0}}) == 5);
  CHECK_THROWS_AS(weyl_dim(a2, Weight{{-1, 0}}), DomainError);
}

TEST_CASE("dual weights") {
  auto a2 = root_system(Family::A, 2);
  CHECK(dual_weight(a2, Weight{{1, 0}}) == Weight{{0, 1}});
  auto c2 = root_system(Family::C, 2);
  CHECK(dual_weight(c2, Weight{{1, 1}}) == Weight{{1, 1}});
}

TEST_CASE("dominant weights up to a cap") {
  auto a2 = root_system(Family::A, 2);
  auto ws = dominant_weights_up_to(a2, 3);
  CHECK(ws.size() == 10);
  CHECK(std::is_sorted(ws.begin(), ws.end()));
}
