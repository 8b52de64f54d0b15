#include "strval/rootdata.hpp"

#include "strval/errors.hpp"
#include "strval/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace strval {

std::string to_string(Family f) { return f == Family::A ? "A" : "C"; }

Family parse_family(const std::string& label) {
  if (label == "A" || label == "a") return Family::A;
  if (label == "C" || label == "c") return Family::C;
  throw CapabilityError("unsupported root system family '" + label + "' (supported: A, C)");
}

bool Weight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

int Weight::sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Weight& Weight::operator+=(const Weight& other) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

std::string to_string(const WeylWord& w) { return join(w.indices); }
std::string to_string(const Weight& w) { return join(w.coords); }

RootSystemSpec root_system(Family family, int rank) {
  RootSystemSpec spec;
  spec.family = family;
  spec.rank = rank;
  if (family == Family::A) {
    if (rank < 1 || rank > 4)
      throw CapabilityError("type A supported for rank 1..4, got " + std::to_string(rank));
    spec.num_positive_roots = rank * (rank + 1) / 2;
  } else {
    if (rank != 2) throw CapabilityError("type C supported only for rank 2, got " + std::to_string(rank));
    spec.num_positive_roots = rank * rank;
  }
  spec.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    spec.cartan[i][i] = 2;
    if (i + 1 < rank) {
      spec.cartan[i][i + 1] = -1;
      spec.cartan[i + 1][i] = -1;
    }
  }
  if (family == Family::C) {
    // alpha_r = 2 epsilon_r is long: <alpha_{r-1}^vee, alpha_r> = -2.
    spec.cartan[rank - 2][rank - 1] = -2;
  }
  return spec;
}

void validate_word(const RootSystemSpec& spec, const WeylWord& word) {
  for (int i : word.indices) {
    if (i < 1 || i > spec.rank)
      throw DomainError("word index " + std::to_string(i) + " out of range 1.." + std::to_string(spec.rank));
  }
}

void validate_weight(const RootSystemSpec& spec, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != spec.rank)
    throw DomainError("weight " + to_string(w) + " has " + std::to_string(w.coords.size()) +
                      " coordinates, rank is " + std::to_string(spec.rank));
}

Weight simple_root(const RootSystemSpec& spec, int i) {
  Weight w{std::vector<int>(spec.rank)};
  for (int r = 0; r < spec.rank; ++r) w.coords[r] = spec.cartan[r][i - 1];
  return w;
}

Weight fundamental_weight(const RootSystemSpec& spec, int i) {
  Weight w{std::vector<int>(spec.rank, 0)};
  w.coords[i - 1] = 1;
  return w;
}

Weight reflect(const RootSystemSpec& spec, int i, const Weight& mu) {
  return mu - mu.coords[i - 1] * simple_root(spec, i);
}

Weight dual_weight(const RootSystemSpec& spec, const Weight& lambda) {
  Weight out = lambda;
  if (spec.family == Family::A) std::reverse(out.coords.begin(), out.coords.end());
  return out;
}

std::vector<std::vector<int>> positive_coroots(const RootSystemSpec& spec) {
  const int r = spec.rank;
  // Coroots form the root system of the transposed Cartan matrix.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[j] * spec.cartan[j][i];
        std::vector<int> img = beta;
        img[i] -= pairing;
        bool positive = std::all_of(img.begin(), img.end(), [](int c) { return c >= 0; }) &&
                        std::any_of(img.begin(), img.end(), [](int c) { return c > 0; });
        if (positive && seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

int epsilon_dim(const RootSystemSpec& spec) { return spec.family == Family::A ? spec.rank + 1 : spec.rank; }

std::vector<std::vector<int>> positive_roots_epsilon(Family family, int n) {
  std::vector<std::vector<int>> roots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> v(n, 0);
      v[a] = 1;
      v[b] = -1;
      roots.push_back(v);
      if (family == Family::C) {
        v[b] = 1;
        roots.push_back(v);
      }
    }
    if (family == Family::C) {
      std::vector<int> v(n, 0);
      v[a] = 2;
      roots.push_back(v);
    }
  }
  return roots;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystemSpec& spec) {
  std::vector<int> image(epsilon_dim(spec));
  std::iota(image.begin(), image.end(), 1);
  return WeylElement(spec.family, std::move(image));
}

WeylElement WeylElement::from_word(const RootSystemSpec& spec, const WeylWord& word) {
  validate_word(spec, word);
  WeylElement w = identity(spec);
  for (int i : word.indices) w = w.times_simple(i);
  return w;
}

WeylElement WeylElement::times_simple(int i) const {
  std::vector<int> image = image_;
  const int n = static_cast<int>(image.size());
  if (family_ == Family::C && i == n) {
    image[n - 1] = -image[n - 1];
  } else {
    std::swap(image[i - 1], image[i]);
  }
  return WeylElement(family_, std::move(image));
}

int WeylElement::length() const {
  const int n = static_cast<int>(image_.size());
  int count = 0;
  for (const auto& root : positive_roots_epsilon(family_, n)) {
    std::vector<int> img(n, 0);
    for (int j = 0; j < n; ++j) {
      if (root[j] == 0) continue;
      int target = std::abs(image_[j]) - 1;
      img[target] += (image_[j] > 0 ? 1 : -1) * root[j];
    }
    auto it = std::find_if(img.begin(), img.end(), [](int c) { return c != 0; });
    if (it != img.end() && *it < 0) ++count;
  }
  return count;
}

bool WeylElement::is_longest() const {
  const int n = static_cast<int>(image_.size());
  for (int j = 0; j < n; ++j) {
    int expected = family_ == Family::A ? n - j : -(j + 1);
    if (image_[j] != expected) return false;
  }
  return true;
}

int weyl_length(const RootSystemSpec& spec, const WeylWord& word) {
  return WeylElement::from_word(spec, word).length();
}

bool is_reduced(const RootSystemSpec& spec, const WeylWord& word) {
  return weyl_length(spec, word) == static_cast<int>(word.size());
}

std::vector<WeylWord> longest_element_words(const RootSystemSpec& spec) {
  std::vector<WeylWord> out;
  WeylWord current;
  std::function<void(const WeylElement&)> extend = [&](const WeylElement& w) {
    if (static_cast<int>(current.size()) == spec.num_positive_roots) {
      if (!w.is_longest()) throw ConsistencyError("reduced word of length N is not w_0");
      out.push_back(current);
      return;
    }
    for (int i = 1; i <= spec.rank; ++i) {
      WeylElement next = w.times_simple(i);
      if (next.length() != static_cast<int>(current.size()) + 1) continue;
      current.indices.push_back(i);
      extend(next);
      current.indices.pop_back();
    }
  };
  extend(WeylElement::identity(spec));
  return out;
}

std::vector<WeylWord> suffix_elements(const RootSystemSpec& spec, const WeylWord& word) {
  validate_word(spec, word);
  if (static_cast<int>(word.size()) != spec.num_positive_roots || !is_reduced(spec, word))
    throw DomainError("word " + to_string(word) + " is not a reduced word for w_0");
  std::vector<WeylWord> out;
  for (std::size_t k = 0; k <= word.size(); ++k)
    out.push_back(WeylWord{std::vector<int>(word.indices.begin() + k, word.indices.end())});
  return out;
}

std::int64_t weyl_dim(const RootSystemSpec& spec, const Weight& lambda) {
  validate_weight(spec, lambda);
  if (!lambda.dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  Rational dim = 1;
  for (const auto& c : positive_coroots(spec)) {
    long num = 0;
    long den = 0;
    for (int i = 0; i < spec.rank; ++i) {
      num += static_cast<long>(c[i]) * (lambda.coords[i] + 1);
      den += c[i];
    }
    dim *= Rational(num, den);
  }
  if (!is_integer(dim)) throw ConsistencyError("Weyl dimension product is not an integer");
  return numerator(dim).convert_to<std::int64_t>();
}

std::vector<Weight> dominant_weights_up_to(const RootSystemSpec& spec, int cap) {
  std::vector<Weight> out;
  Weight w{std::vector<int>(spec.rank, 0)};
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == spec.rank) {
      out.push_back(w);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      w.coords[pos] = c;
      fill(pos + 1, remaining - c);
    }
  };
  fill(0, cap);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace strval
