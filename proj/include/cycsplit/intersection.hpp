// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "cycsplit/elliptic.hpp"

namespace cycsplit {

/// Intersection cycle F . E against a Weierstrass cubic, supported on
/// rational points.
struct IntersectionDivisor {
  std::map<EPoint, int> entries;
  int total = 0;

  friend bool operator==(const IntersectionDivisor&, const IntersectionDivisor&) = default;
};

/// Default branch precision for multiplicities against a cubic: one past the
/// Bezout bound 3 deg F.
inline std::size_t bezout_precision(const HomogeneousForm& f) { return 3 * f.degree() + 1; }

BranchParametrization branch_at(const WeierstrassCurve& e, const EPoint& p, std::size_t precision,
                                ChartChoice choice = {});

/// Throws CommonComponent when F vanishes identically on E and
/// NonRationalIntersection when the rational multiplicities fall short of
/// 3 deg F.
IntersectionDivisor intersection_divisor(const HomogeneousForm& f, const WeierstrassCurve& e);

}  // namespace cycsplit
