// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/intersection.hpp"

#include <string>

namespace cycsplit {

BranchParametrization branch_at(const WeierstrassCurve& e, const EPoint& p, std::size_t precision,
                                ChartChoice choice) {
  return local_parametrization(e.form(), e.to_projective(p), precision, choice);
}

IntersectionDivisor intersection_divisor(const HomogeneousForm& f, const WeierstrassCurve& e) {
  if (!(f.field() == e.field())) throw Error(Errc::FieldMismatch, "form and cubic over different fields");
  if (f.is_zero()) throw Error(Errc::CommonComponent, "zero form contains the cubic");
  const std::size_t precision = bezout_precision(f);
  const int expected = 3 * f.degree();

  IntersectionDivisor out;
  for (const EPoint& p : e.points()) {
    if (f.evaluate(e.to_projective(p).coords()) != 0) continue;
    int mult;
    try {
      mult = intersection_multiplicity(f, branch_at(e, p, precision));
    } catch (const Error& err) {
      if (err.code() != Errc::PrecisionExhausted) throw;
      throw Error(Errc::CommonComponent, "form vanishes on the cubic beyond the Bezout bound");
    }
    out.entries.emplace(p, mult);
    out.total += mult;
  }
  if (out.total > expected)
    throw Error(Errc::Internal, "intersection total exceeds the Bezout number");
  if (out.total < expected)
    throw Error(Errc::NonRationalIntersection,
                "rational intersections account for " + std::to_string(out.total) + " of " +
                    std::to_string(expected));
  return out;
}

}  // namespace cycsplit
