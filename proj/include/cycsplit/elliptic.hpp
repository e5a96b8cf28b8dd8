// SPDX-License-Identifier: Apache-2.0
//
// Short Weierstrass cubics Y^2 Z = X^3 + a4 X Z^2 + a6 Z^3 with the flex
// O = [0:1:0] as identity, their rational points, and degree-0 divisor
// classes reduced to points through the group law.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cycsplit/geometry.hpp"

namespace cycsplit {

class EPoint {
 public:
  static EPoint infinity() { return EPoint(); }
  static EPoint affine(std::uint32_t x, std::uint32_t y) { return EPoint(x, y); }

  bool is_infinity() const noexcept { return inf_; }
  std::uint32_t x() const noexcept { return x_; }
  std::uint32_t y() const noexcept { return y_; }

  friend bool operator==(const EPoint&, const EPoint&) = default;
  /// O first, then affine points by (x, y).
  friend bool operator<(const EPoint& a, const EPoint& b) {
    if (a.inf_ != b.inf_) return a.inf_;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

 private:
  EPoint() = default;
  EPoint(std::uint32_t x, std::uint32_t y) : inf_(false), x_(x), y_(y) {}

  bool inf_ = true;
  std::uint32_t x_ = 0, y_ = 0;
};

class WeierstrassCurve {
 public:
  /// Throws SingularCurve when 4 a4^3 + 27 a6^2 = 0.
  WeierstrassCurve(const PrimeField& field, std::uint32_t a4, std::uint32_t a6);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t a4() const noexcept { return a4_; }
  std::uint32_t a6() const noexcept { return a6_; }
  /// -16 (4 a4^3 + 27 a6^2) mod p.
  std::uint32_t discriminant() const noexcept;

  /// Y^2 Z - X^3 - a4 X Z^2 - a6 Z^3.
  const HomogeneousForm& form() const noexcept { return *form_; }

  bool contains(const EPoint& p) const noexcept;
  ProjPoint to_projective(const EPoint& p) const;
  /// Inverse of to_projective; throws NotOnCurve.
  EPoint from_projective(const ProjPoint& p) const;

  /// All rational points, O first then affine points sorted by (x, y).
  const std::vector<EPoint>& points() const noexcept { return *points_; }

  struct Reduction {
    HomogeneousForm quotient;
    HomogeneousForm remainder;
  };
  /// Exact division by form(): g = quotient * form() + remainder where no
  /// term of the remainder is divisible by Y^2 Z.
  Reduction reduce(const HomogeneousForm& g) const;

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.field_ == b.field_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

 private:
  PrimeField field_;
  std::uint32_t a4_, a6_;
  std::shared_ptr<const HomogeneousForm> form_;
  std::shared_ptr<const std::vector<EPoint>> points_;
};

EPoint negate(const EPoint& p, const WeierstrassCurve& e);
EPoint add_points(const EPoint& p, const EPoint& q, const WeierstrassCurve& e);
EPoint scalar_multiply(std::int64_t k, const EPoint& p, const WeierstrassCurve& e);
std::uint64_t group_order(const WeierstrassCurve& e);
std::uint64_t point_order(const EPoint& p, const WeierstrassCurve& e);

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<int> divisors_of(int n);

/// Finite formal sum of rational points; zero coefficients are never stored.
class DivisorOnE {
 public:
  using Entries = std::map<EPoint, std::int64_t>;

  void add(const EPoint& p, std::int64_t coefficient);
  const Entries& entries() const noexcept { return entries_; }
  std::int64_t degree() const noexcept;
  DivisorOnE operator+(const DivisorOnE& o) const;
  DivisorOnE scaled(std::int64_t k) const;

  friend bool operator==(const DivisorOnE&, const DivisorOnE&) = default;

 private:
  Entries entries_;
};

/// Group-law sum of a degree-0 divisor; it is O iff the divisor is principal.
EPoint divisor_class_point(const DivisorOnE& d, const WeierstrassCurve& e);
std::uint64_t class_order(const DivisorOnE& d, const WeierstrassCurve& e);

struct PointSearch {
  std::uint64_t seed = 0;
  int random_tries = 64;
};

/// A point of exact order mu; random scaled points first, then an exhaustive
/// pass over the rational points. Throws NoSuchOrder.
EPoint find_point_of_order(const WeierstrassCurve& e, std::uint64_t mu, PointSearch search = {});

}  // namespace cycsplit
