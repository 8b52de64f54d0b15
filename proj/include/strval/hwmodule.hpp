#pragma once

#include "strval/linalg.hpp"
#include "strval/rootdata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace strval {

/// Finite-dimensional representation given by Chevalley generator matrices on a weight basis.
struct ChevalleyRep {
  RootSystemSpec spec;
  int dim = 0;
  std::vector<Weight> weights;
  std::vector<SparseMatrix> E, F, H;  // indexed by simple root, 0-based

  /// Human-readable descriptions of violated relations ([E_i,F_j] = delta_ij H_i,
  /// [H_i,E_j] = a_ij E_j, [H_i,F_j] = -a_ij F_j, Serre relations, nilpotency). Empty when valid.
  std::vector<std::string> relation_violations() const;
};

ChevalleyRep build_defining_rep(const RootSystemSpec& spec);
ChevalleyRep tensor_product(const ChevalleyRep& a, const ChevalleyRep& b);
ChevalleyRep exterior_power(const ChevalleyRep& rep, int k);

inline constexpr std::int64_t kDefaultDimensionCap = 200;

/// The irreducible module V_lambda with E/F matrices on a weight basis.
/// Basis vector 0 is the highest weight vector v_lambda; the other basis vectors
/// are F_i-images of earlier ones, so for A_1 the basis is v, Fv, F^2 v, ...
struct HWModule {
  RootSystemSpec spec;
  Weight lambda;
  std::vector<Weight> basis_weights;
  std::vector<SparseMatrix> op_E, op_F;
  int hw_index = 0;

  int dim() const { return static_cast<int>(basis_weights.size()); }
  ChevalleyRep as_rep() const;
};

/// Builds V_lambda as the F-closure of the highest weight vector. V_lambda for lambda = omega_i is
/// cut out of an exterior power of the defining representation; otherwise V_lambda is cut out of
/// V_{lambda - omega_i} (x) V_{omega_i} for the first i with lambda_i > 0.
HWModule build_hw_module(const RootSystemSpec& spec, const Weight& lambda,
                         std::int64_t dimension_cap = kDefaultDimensionCap);

/// F-closure of the basis vector `highest` inside an ambient representation.
HWModule highest_weight_closure(const ChevalleyRep& ambient, int highest);

/// sigma in V* in coordinates dual to the module basis.
struct DualVector {
  RationalVector coords;

  bool is_zero() const { return strval::is_zero(coords); }
  friend bool operator==(const DualVector&, const DualVector&) = default;
};

DualVector dual_basis_vector(const HWModule& module, int index);

/// The functional v -> sigma(F_i v). i is 1-based.
DualVector dual_action_F(const HWModule& module, int i, const DualVector& sigma);

/// sigma(v) for v given in module coordinates.
Rational pair(const DualVector& sigma, const RationalVector& v);

}  // namespace strval
