// SPDX-License-Identifier: Apache-2.0
//
// Curves R = B + E of type (b, m): B smooth of degree b meeting the cubic E
// in exactly 3n points (n = b/m), each with multiplicity m. The invariant
// lambda(R) is the order of the class of D_R - nH; one instance is built per
// requested order mu | m.

#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "cycsplit/certificate.hpp"

namespace cycsplit {

struct ConstructionRequest {
  int b;
  int m;
  int mu;
  WeierstrassCurve curve;
  std::uint64_t seed = 0;
  int retry_budget = 64;

  int n() const noexcept { return b / m; }
  /// Throws InvalidInput / InvalidCover for inconsistent parameters.
  void validate() const;
};

/// 3n distinct affine points whose group sum has exact order mu. The order-mu
/// point comes from find_point_of_order seeded by req.seed; the points are
/// drawn from `rng`. Throws NoSuchOrder or RetryExhausted.
std::vector<EPoint> sample_divisor_with_class(const ConstructionRequest& req, std::mt19937_64& rng);
std::vector<EPoint> sample_divisor_with_class(const ConstructionRequest& req);

/// Degree-b forms with contact order >= m at each point, as a kernel plus the
/// rank evidence. Throws EmptyKernel when only multiples of E qualify.
struct InterpolationSpace {
  std::vector<std::vector<std::uint32_t>> kernel;
  RankEvidence rank;
};
InterpolationSpace interpolation_space(const std::vector<EPoint>& points, const ConstructionRequest& req);

/// A seeded random member of the interpolation space that passes the
/// exact-divisor and smoothness screens. Throws RetryExhausted with the
/// failing check as detail.
HomogeneousForm interpolate_branched_curve(const std::vector<EPoint>& points, const ConstructionRequest& req);

struct TypeCheck {
  bool pass = false;
  std::string evidence;
};

struct TypeBMReport {
  std::map<std::string, TypeCheck> checks;  // components, degrees, multiplicity, point_count, smoothness

  bool passed() const;
  Json to_json() const;
};

TypeBMReport verify_type_bm(const HomogeneousForm& branch, const WeierstrassCurve& cubic, int b, int m);

struct ConstructedInstance {
  HomogeneousForm form;
  std::vector<EPoint> points;
  TypeBMReport report;
  /// 1-based index of the successful attempt; replaying with this budget
  /// reproduces the same form.
  int attempt;
};

/// The full pipeline: sample, interpolate, screen. Each attempt draws one
/// point set and one kernel combination from a single seeded stream.
ConstructedInstance construct_curve(const ConstructionRequest& req);

struct KpletMember {
  int mu;
  ConstructedInstance instance;
  SplittingCertificate certificate;
};

/// Seed used for the member with target order mu.
std::uint64_t member_seed(std::uint64_t seed, int mu);

/// One certified member per divisor mu of m, ascending. Throws
/// UnrealizableOrder naming the orders without a rational point.
std::vector<KpletMember> build_kplet(int b, int m, const WeierstrassCurve& curve, std::uint64_t seed,
                                     int retry_budget = 64);

/// Smallest p >= min_p (then smallest (a4, a6) lexicographically) with
/// gcd(p, 6m) = 1, a point of order m, and at least 6n + 1 rational points.
WeierstrassCurve find_curve_for(int b, int m, std::uint32_t min_p = 5);

}  // namespace cycsplit
