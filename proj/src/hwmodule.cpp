#include "strval/hwmodule.hpp"

#include "strval/errors.hpp"

#include <algorithm>
#include <map>

namespace strval {

namespace {

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix diagonal_from_weights(const std::vector<Weight>& weights, int i) {
  const int n = static_cast<int>(weights.size());
  SparseMatrix h(n, n);
  for (int j = 0; j < n; ++j) h.set_col(j, SparseVec::unit(j, weights[j].coords[i]));
  return h;
}

std::vector<Weight> weights_from_diagonal(const std::vector<SparseMatrix>& H, int dim) {
  std::vector<Weight> out(dim, Weight{std::vector<int>(H.size(), 0)});
  for (std::size_t i = 0; i < H.size(); ++i) {
    for (int j = 0; j < dim; ++j) {
      Rational d = H[i].at(j, j);
      out[j].coords[i] = static_cast<int>(numerator(d).convert_to<long>());
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> ChevalleyRep::relation_violations() const {
  std::vector<std::string> bad;
  const int r = spec.rank;
  auto name = [](const char* what, int i, int j) {
    return std::string(what) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      SparseMatrix ef = commutator(E[i], F[j]);
      if (i == j ? !(ef == H[i]) : !ef.is_zero()) bad.push_back(name("[E,F]", i, j));
      const int a = spec.cartan[i][j];
      if (!(commutator(H[i], E[j]) == E[j].scaled(a))) bad.push_back(name("[H,E]", i, j));
      if (!(commutator(H[i], F[j]) == F[j].scaled(-a))) bad.push_back(name("[H,F]", i, j));
      if (i != j) {
        SparseMatrix se = E[j];
        SparseMatrix sf = F[j];
        for (int k = 0; k < 1 - a; ++k) {
          se = commutator(E[i], se);
          sf = commutator(F[i], sf);
        }
        if (!se.is_zero()) bad.push_back(name("serre-E", i, j));
        if (!sf.is_zero()) bad.push_back(name("serre-F", i, j));
      }
    }
    SparseMatrix pe = SparseMatrix::identity(dim);
    SparseMatrix pf = SparseMatrix::identity(dim);
    for (int k = 0; k < dim; ++k) {
      pe = pe * E[i];
      pf = pf * F[i];
    }
    if (!pe.is_zero()) bad.push_back(name("nilpotent-E", i, i));
    if (!pf.is_zero()) bad.push_back(name("nilpotent-F", i, i));
  }
  return bad;
}

ChevalleyRep build_defining_rep(const RootSystemSpec& spec) {
  ChevalleyRep rep;
  rep.spec = spec;
  const int r = spec.rank;
  if (spec.family == Family::A) {
    const int n = r + 1;
    rep.dim = n;
    for (int i = 1; i <= r; ++i) {
      SparseMatrix e(n, n), f(n, n);
      e.add_to(i - 1, i, 1);
      f.add_to(i, i - 1, 1);
      rep.E.push_back(e);
      rep.F.push_back(f);
    }
  } else if (spec.family == Family::C && r == 2) {
    // Basis e1, e2, e_{-2}, e_{-1}.
    rep.dim = 4;
    SparseMatrix e1(4, 4), f1(4, 4), e2(4, 4), f2(4, 4);
    e1.add_to(0, 1, 1);
    e1.add_to(2, 3, -1);
    f1.add_to(1, 0, 1);
    f1.add_to(3, 2, -1);
    e2.add_to(1, 2, 1);
    f2.add_to(2, 1, 1);
    rep.E = {e1, e2};
    rep.F = {f1, f2};
  } else {
    throw CapabilityError("no defining representation for " + to_string(spec.family) + std::to_string(r));
  }
  for (int i = 0; i < r; ++i) rep.H.push_back(commutator(rep.E[i], rep.F[i]));
  rep.weights = weights_from_diagonal(rep.H, rep.dim);
  return rep;
}

ChevalleyRep tensor_product(const ChevalleyRep& a, const ChevalleyRep& b) {
  ChevalleyRep out;
  out.spec = a.spec;
  out.dim = a.dim * b.dim;
  for (int x = 0; x < a.dim; ++x)
    for (int y = 0; y < b.dim; ++y) out.weights.push_back(a.weights[x] + b.weights[y]);
  auto lift = [&](const SparseMatrix& ma, const SparseMatrix& mb) {
    SparseMatrix m(out.dim, out.dim);
    for (int x = 0; x < a.dim; ++x) {
      for (int y = 0; y < b.dim; ++y) {
        std::map<int, Rational> col;
        for (const auto& [x2, v] : ma.col(x).entries()) col[x2 * b.dim + y] += v;
        for (const auto& [y2, v] : mb.col(y).entries()) col[x * b.dim + y2] += v;
        m.set_col(x * b.dim + y, SparseVec::from_map(col));
      }
    }
    return m;
  };
  for (int i = 0; i < a.spec.rank; ++i) {
    out.E.push_back(lift(a.E[i], b.E[i]));
    out.F.push_back(lift(a.F[i], b.F[i]));
    out.H.push_back(lift(a.H[i], b.H[i]));
  }
  return out;
}

ChevalleyRep exterior_power(const ChevalleyRep& rep, int k) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto gen = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int s = start; s < rep.dim; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  gen(gen, 0);
  std::map<std::vector<int>, int> index;
  for (std::size_t t = 0; t < subsets.size(); ++t) index[subsets[t]] = static_cast<int>(t);

  ChevalleyRep out;
  out.spec = rep.spec;
  out.dim = static_cast<int>(subsets.size());
  for (const auto& s : subsets) {
    Weight w{std::vector<int>(rep.spec.rank, 0)};
    for (int x : s) w += rep.weights[x];
    out.weights.push_back(w);
  }
  auto lift = [&](const SparseMatrix& m) {
    SparseMatrix res(out.dim, out.dim);
    for (int t = 0; t < out.dim; ++t) {
      std::map<int, Rational> col;
      const auto& s = subsets[t];
      for (int p = 0; p < k; ++p) {
        for (const auto& [q, v] : m.col(s[p]).entries()) {
          std::vector<int> img = s;
          img[p] = q;
          if (std::count(img.begin(), img.end(), q) > 1) continue;
          // Sign of the permutation sorting img.
          int inversions = 0;
          for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y)
              if (img[x] > img[y]) ++inversions;
          std::sort(img.begin(), img.end());
          col[index.at(img)] += (inversions % 2 ? -v : v);
        }
      }
      res.set_col(t, SparseVec::from_map(col));
    }
    return res;
  };
  for (int i = 0; i < rep.spec.rank; ++i) {
    out.E.push_back(lift(rep.E[i]));
    out.F.push_back(lift(rep.F[i]));
    out.H.push_back(lift(rep.H[i]));
  }
  return out;
}

ChevalleyRep HWModule::as_rep() const {
  ChevalleyRep rep;
  rep.spec = spec;
  rep.dim = dim();
  rep.weights = basis_weights;
  rep.E = op_E;
  rep.F = op_F;
  for (int i = 0; i < spec.rank; ++i) rep.H.push_back(diagonal_from_weights(basis_weights, i));
  return rep;
}

HWModule highest_weight_closure(const ChevalleyRep& ambient, int highest) {
  const RootSystemSpec& spec = ambient.spec;
  const int r = spec.rank;
  std::vector<Weight> alpha;
  for (int i = 1; i <= r; ++i) alpha.push_back(simple_root(spec, i));

  std::vector<SparseVec> basis{SparseVec::unit(highest)};
  std::vector<Weight> weights{ambient.weights[highest]};
  std::map<Weight, EchelonBasis> spaces;
  std::map<Weight, std::vector<int>> members;
  spaces[weights[0]].add(basis[0]);
  members[weights[0]].push_back(0);

  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    for (int i = 0; i < r; ++i) {
      SparseVec img = ambient.F[i].apply(basis[idx]);
      if (img.empty()) continue;
      Weight target = weights[idx] - alpha[i];
      if (spaces[target].add(img)) {
        members[target].push_back(static_cast<int>(basis.size()));
        basis.push_back(img);
        weights.push_back(target);
      }
    }
  }

  HWModule mod;
  mod.spec = spec;
  mod.lambda = weights[0];
  mod.basis_weights = weights;
  mod.hw_index = 0;
  const int n = static_cast<int>(basis.size());
  auto express = [&](const SparseMatrix& op, int j, const Weight& target) {
    SparseVec img = op.apply(basis[j]);
    if (img.empty()) return SparseVec{};
    auto it = spaces.find(target);
    std::optional<RationalVector> coords;
    if (it != spaces.end()) coords = it->second.coordinates(img);
    if (!coords) throw ConsistencyError("operator image leaves the highest weight submodule");
    std::map<int, Rational> col;
    const auto& idx = members.at(target);
    for (std::size_t t = 0; t < idx.size(); ++t) col[idx[t]] = (*coords)[t];
    return SparseVec::from_map(col);
  };
  for (int i = 0; i < r; ++i) {
    SparseMatrix e(n, n), f(n, n);
    for (int j = 0; j < n; ++j) {
      f.set_col(j, express(ambient.F[i], j, weights[j] - alpha[i]));
      e.set_col(j, express(ambient.E[i], j, weights[j] + alpha[i]));
    }
    mod.op_E.push_back(std::move(e));
    mod.op_F.push_back(std::move(f));
  }
  return mod;
}

namespace {

HWModule trivial_module(const RootSystemSpec& spec) {
  HWModule mod;
  mod.spec = spec;
  mod.lambda = Weight{std::vector<int>(spec.rank, 0)};
  mod.basis_weights = {mod.lambda};
  for (int i = 0; i < spec.rank; ++i) {
    mod.op_E.emplace_back(1, 1);
    mod.op_F.emplace_back(1, 1);
  }
  return mod;
}

ChevalleyRep fundamental_ambient(const RootSystemSpec& spec, int i) {
  ChevalleyRep def = build_defining_rep(spec);
  if (spec.family == Family::A) return exterior_power(def, i);
  return i == 1 ? def : exterior_power(def, 2);
}

}  // namespace

HWModule build_hw_module(const RootSystemSpec& spec, const Weight& lambda, std::int64_t dimension_cap) {
  validate_weight(spec, lambda);
  if (!lambda.dominant()) throw DomainError("weight " + to_string(lambda) + " is not dominant");
  const std::int64_t expected = weyl_dim(spec, lambda);
  if (expected > dimension_cap)
    throw CapabilityError("dim V_" + to_string(lambda) + " = " + std::to_string(expected) +
                          " exceeds the dimension cap " + std::to_string(dimension_cap));
  if (lambda.sum() == 0) return trivial_module(spec);

  int first = 0;
  while (lambda.coords[first] == 0) ++first;
  const int i = first + 1;
  HWModule mod;
  if (lambda.sum() == 1) {
    mod = highest_weight_closure(fundamental_ambient(spec, i), 0);
  } else {
    HWModule smaller = build_hw_module(spec, lambda - fundamental_weight(spec, i), dimension_cap);
    HWModule fund = build_hw_module(spec, fundamental_weight(spec, i), dimension_cap);
    mod = highest_weight_closure(tensor_product(smaller.as_rep(), fund.as_rep()), 0);
  }
  if (!(mod.lambda == lambda) || mod.dim() != expected)
    throw ConsistencyError("constructed module for " + to_string(lambda) + " has dimension " +
                           std::to_string(mod.dim()) + ", expected " + std::to_string(expected));
  return mod;
}

DualVector dual_basis_vector(const HWModule& module, int index) {
  DualVector s{RationalVector(module.dim())};
  s.coords[index] = 1;
  return s;
}

DualVector dual_action_F(const HWModule& module, int i, const DualVector& sigma) {
  return DualVector{module.op_F[i - 1].apply_transpose(sigma.coords)};
}

Rational pair(const DualVector& sigma, const RationalVector& v) { return dot(sigma.coords, v); }

}  // namespace strval
