// SPDX-License-Identifier: Apache-2.0
//
// Plane projective geometry over F_p: ternary forms, points, smooth local
// branches, and smoothness of plane curves.

#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "cycsplit/arith.hpp"

namespace cycsplit {

/// Exponent triple of X^x Y^y Z^z.
struct Monomial {
  int x = 0, y = 0, z = 0;

  int degree() const noexcept { return x + y + z; }
  int operator[](int var) const noexcept { return var == 0 ? x : var == 1 ? y : z; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: higher X power first, then higher Y power.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
  }
};

/// All monomials of degree d in canonical order; the index in this list is
/// the column index used by every linear system on forms.
std::vector<Monomial> monomials_of_degree(int d);
std::size_t monomial_count(int d) noexcept;

class ProjPoint {
 public:
  /// Normalizes so that the last nonzero coordinate is 1.
  ProjPoint(const PrimeField& field, std::uint32_t x, std::uint32_t y, std::uint32_t z);

  const PrimeField& field() const noexcept { return field_; }
  const std::array<std::uint32_t, 3>& coords() const noexcept { return c_; }
  std::uint32_t operator[](int i) const noexcept { return c_[i]; }
  /// Index of the coordinate equal to 1 in the canonical representative.
  int chart() const noexcept;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  PrimeField field_;
  std::array<std::uint32_t, 3> c_;
};

class HomogeneousForm {
 public:
  using Terms = std::map<Monomial, std::uint32_t, MonomialOrder>;

  /// The zero form of the given degree.
  HomogeneousForm(const PrimeField& field, int degree);

  const PrimeField& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::uint32_t coefficient(const Monomial& m) const;
  /// Sets a coefficient (reduced mod p); zero removes the term.
  void set(const Monomial& m, std::int64_t c);
  void add_to(const Monomial& m, std::uint32_t c);

  HomogeneousForm operator+(const HomogeneousForm& o) const;
  HomogeneousForm operator-(const HomogeneousForm& o) const;
  HomogeneousForm operator*(const HomogeneousForm& o) const;
  HomogeneousForm scaled(std::uint32_t c) const;
  /// Scaled so that the first term in canonical order has coefficient 1.
  HomogeneousForm monic() const;
  HomogeneousForm partial(int var) const;

  std::uint32_t evaluate(const std::array<std::uint32_t, 3>& xyz) const;
  TruncSeries evaluate(const std::array<TruncSeries, 3>& xyz) const;

  /// Coefficients in the monomials_of_degree(degree) basis.
  std::vector<std::uint32_t> to_vector() const;
  static HomogeneousForm from_vector(const PrimeField& field, int degree,
                                     std::span<const std::uint32_t> v);

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.field_ == b.field_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_field(const HomogeneousForm& o) const;

  PrimeField field_;
  int degree_;
  Terms terms_;
};

Scalar evaluate_form(const HomogeneousForm& f, const ProjPoint& p);

/// Every degree-d power of the three coordinate series, indexed by
/// monomials_of_degree(d). Shared by form evaluation and the linear systems.
std::vector<TruncSeries> monomial_series(const std::array<TruncSeries, 3>& xyz, int d);

/// Optional override of the chart used by local_parametrization.
struct ChartChoice {
  std::optional<int> chart;      ///< coordinate set to 1; must be nonzero at the center
  std::optional<int> dependent;  ///< coordinate solved for; needs a nonzero partial
};

/// A smooth branch of a plane curve as a homogeneous coordinate triple of
/// power series: coordinate `chart` is 1, `independent` is center + t and
/// `dependent` is the Newton solution.
struct BranchParametrization {
  ProjPoint center;
  int chart;
  int independent;
  int dependent;
  std::array<TruncSeries, 3> coordinates;

  std::size_t precision() const noexcept { return coordinates[0].precision(); }
  const TruncSeries& x_series() const noexcept { return coordinates[independent]; }
  const TruncSeries& y_series() const noexcept { return coordinates[dependent]; }
};

BranchParametrization local_parametrization(const HomogeneousForm& curve, const ProjPoint& p,
                                            std::size_t precision, ChartChoice choice = {});

/// Order of vanishing of f along the branch. Throws PrecisionExhausted when
/// f vanishes to the full stored precision.
int intersection_multiplicity(const HomogeneousForm& f, const BranchParametrization& branch);

struct SmoothnessReport {
  bool smooth = false;
  /// A rational singular point, when one exists and the field is small
  /// enough to scan.
  std::optional<ProjPoint> singular_point;
  /// Rank evidence: span of (F, F_X, F_Y, F_Z) in degree `degree`.
  int degree = 0;
  std::size_t rows = 0, cols = 0, rank = 0;
};

/// Decides whether F = 0 is nonsingular over the algebraic closure of F_p.
/// The ideal (F, F_X, F_Y, F_Z) has no projective zero iff it contains every
/// form of degree 3d - 4 (3d - 2 when p divides d), a rank condition on a
/// Macaulay matrix.
SmoothnessReport curve_is_smooth(const HomogeneousForm& f);

/// Rational singular point scan over P^2(F_p), in canonical enumeration
/// order ([1:0:0], [x:1:0], [x:y:1]).
std::optional<ProjPoint> find_rational_singular_point(const HomogeneousForm& f);

}  // namespace cycsplit
