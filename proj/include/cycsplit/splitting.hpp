// SPDX-License-Identifier: Apache-2.0
//
// Splitting numbers of a Weierstrass cubic E under the degree-m simple cyclic
// cover branched along B, computed two ways:
//
//  * class-order path: D = (1/m) (B . E); the class of D - nH is the group
//    sum of D (flex model), and s = m / ord(class).
//  * interpolation path: the least k such that some degree-kn form G, not a
//    multiple of E, cuts out exactly k D on E; s = m / k.

#pragma once

#include <optional>
#include <vector>

#include "cycsplit/intersection.hpp"

namespace cycsplit {

struct CoverSpec {
  int m;
  int b;
  int n;
  HomogeneousForm branch_form;
  WeierstrassCurve cubic;

  /// Validates m | deg B, gcd(p, 6m) = 1 and m >= 1; throws InvalidCover.
  static CoverSpec make(HomogeneousForm branch_form, WeierstrassCurve cubic, int m);
};

/// D_{B,E} = (1/m) (B . E), together with the intersection it came from.
struct ReducedBranchDivisor {
  DivisorOnE divisor;
  int n;
  IntersectionDivisor intersection;
};

/// Throws EssentiallyRamified when some local multiplicity is not divisible
/// by m; geometry errors propagate.
ReducedBranchDivisor assemble_dbc(const CoverSpec& cover);

struct SplitResult {
  int nu;
  int lambda;
  EPoint class_point;
};

SplitResult splitting_number(const CoverSpec& cover);
SplitResult splitting_number(const CoverSpec& cover, const ReducedBranchDivisor& dbc);

int lambda_invariant(const HomogeneousForm& branch_form, const WeierstrassCurve& cubic, int m);

/// Linear conditions on degree-`degree` forms G: G vanishes to order at least
/// k * coeff(P) along E at every P of `points`. Columns follow
/// monomials_of_degree(degree).
DenseMatrix contact_matrix(const DivisorOnE& points, int k, int degree, const WeierstrassCurve& cubic);

struct RankEvidence {
  std::size_t rows = 0, cols = 0, rank = 0;
  /// dim of E * (forms of degree deg - 3), always inside the kernel
  std::size_t multiples_dim = 0;

  std::size_t kernel_dim() const noexcept { return cols - rank; }
  friend bool operator==(const RankEvidence&, const RankEvidence&) = default;
};

struct LevelEvidence {
  int k;
  RankEvidence rank;
  /// Monic remainder modulo E of the first kernel vector that is not a
  /// multiple of E.
  std::optional<HomogeneousForm> witness;
};

LevelEvidence principality_witness(const ReducedBranchDivisor& dbc, int k, const WeierstrassCurve& cubic);

/// True iff G . E = k D exactly. CommonComponent propagates.
bool verify_witness(const HomogeneousForm& g, const ReducedBranchDivisor& dbc, int k,
                    const WeierstrassCurve& cubic);

/// Levels k = 1, 2, ... up to and including the first one with a witness.
std::vector<LevelEvidence> interpolation_levels(const CoverSpec& cover, const ReducedBranchDivisor& dbc);

int splitting_number_oracle(const CoverSpec& cover);

}  // namespace cycsplit
