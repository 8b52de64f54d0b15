#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace strval {

enum class Family { A, C };

std::string to_string(Family f);
Family parse_family(const std::string& label);

using IntMatrix = std::vector<std::vector<int>>;

/// Weight in the fundamental-weight basis. Ordered lexicographically in that basis.
struct Weight {
  std::vector<int> coords;

  bool dominant() const;
  int sum() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Sequence of simple reflection indices, 1-based.
struct WeylWord {
  std::vector<int> indices;

  std::size_t size() const { return indices.size(); }
  int operator[](std::size_t k) const { return indices[k]; }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

std::string to_string(const WeylWord& w);
std::string to_string(const Weight& w);

/// Cartan data for A_1..A_4 and C_2. The Cartan matrix uses a_ij = <alpha_i^vee, alpha_j>,
/// so simple root alpha_j has fundamental-weight coordinates given by column j.
struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;
  IntMatrix cartan;
  int num_positive_roots = 1;

  friend bool operator==(const RootSystemSpec& a, const RootSystemSpec& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

/// Throws CapabilityError for anything outside A_1..A_4, C_2.
RootSystemSpec root_system(Family family, int rank);

Weight simple_root(const RootSystemSpec& spec, int i);
Weight fundamental_weight(const RootSystemSpec& spec, int i);

/// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i.
Weight reflect(const RootSystemSpec& spec, int i, const Weight& mu);

/// lambda* = -w_0 lambda.
Weight dual_weight(const RootSystemSpec& spec, const Weight& lambda);

/// Positive coroots in simple-coroot coordinates.
std::vector<std::vector<int>> positive_coroots(const RootSystemSpec& spec);

void validate_word(const RootSystemSpec& spec, const WeylWord& word);
void validate_weight(const RootSystemSpec& spec, const Weight& w);

/// Weyl group element realized as a signed permutation of the epsilon basis
/// (plain permutation of {1..r+1} for A_r, signed permutation of {1..r} for C_r).
class WeylElement {
 public:
  static WeylElement identity(const RootSystemSpec& spec);
  static WeylElement from_word(const RootSystemSpec& spec, const WeylWord& word);

  /// this * s_i
  WeylElement times_simple(int i) const;
  int length() const;
  bool is_longest() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  WeylElement(Family f, std::vector<int> image) : family_(f), image_(std::move(image)) {}
  Family family_;
  // image_[j] = +/-(k+1): epsilon_j maps to sign * epsilon_k.
  std::vector<int> image_;
};

int weyl_length(const RootSystemSpec& spec, const WeylWord& word);
bool is_reduced(const RootSystemSpec& spec, const WeylWord& word);

/// All reduced words of w_0, sorted lexicographically.
std::vector<WeylWord> longest_element_words(const RootSystemSpec& spec);

/// (w_0, w_1, ..., w_N) with w_k the suffix after the first k letters.
std::vector<WeylWord> suffix_elements(const RootSystemSpec& spec, const WeylWord& word);

/// dim V_lambda by the Weyl product over positive roots.
std::int64_t weyl_dim(const RootSystemSpec& spec, const Weight& lambda);

/// All dominant weights with coordinate sum <= cap, in lexicographic order.
std::vector<Weight> dominant_weights_up_to(const RootSystemSpec& spec, int cap);

}  // namespace strval
