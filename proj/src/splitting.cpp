// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/splitting.hpp"

#include <numeric>
#include <string>

namespace cycsplit {

CoverSpec CoverSpec::make(HomogeneousForm branch_form, WeierstrassCurve cubic, int m) {
  if (!(branch_form.field() == cubic.field()))
    throw Error(Errc::FieldMismatch, "branch form and cubic over different fields");
  const int b = branch_form.degree();
  if (m < 1) throw Error(Errc::InvalidCover, "cover degree m must be positive");
  if (b < 1 || branch_form.is_zero()) throw Error(Errc::InvalidCover, "branch curve must have positive degree");
  if (b % m != 0)
    throw Error(Errc::InvalidCover, "m = " + std::to_string(m) + " does not divide b = " + std::to_string(b));
  const std::uint32_t p = cubic.field().modulus();
  if (std::gcd<std::uint64_t, std::uint64_t>(p, 6ull * m) != 1)
    throw Error(Errc::InvalidCover, "p = " + std::to_string(p) + " must be prime to 6m");
  return CoverSpec{m, b, b / m, std::move(branch_form), std::move(cubic)};
}

ReducedBranchDivisor assemble_dbc(const CoverSpec& cover) {
  ReducedBranchDivisor out{{}, cover.n, intersection_divisor(cover.branch_form, cover.cubic)};
  for (const auto& [p, mult] : out.intersection.entries) {
    if (mult % cover.m != 0) {
      const std::string where = p.is_infinity() ? "O" : "(" + std::to_string(p.x()) + ", " + std::to_string(p.y()) + ")";
      throw Error(Errc::EssentiallyRamified,
                  "local intersection multiplicity " + std::to_string(mult) + " at " + where +
                      " is not divisible by m = " + std::to_string(cover.m),
                  where);
    }
    out.divisor.add(p, mult / cover.m);
  }
  return out;
}

SplitResult splitting_number(const CoverSpec& cover, const ReducedBranchDivisor& dbc) {
  // nH is linearly equivalent to 3n O in the flex model.
  DivisorOnE shifted = dbc.divisor;
  shifted.add(EPoint::infinity(), -3 * static_cast<std::int64_t>(dbc.n));
  const EPoint cls = divisor_class_point(shifted, cover.cubic);
  const auto lambda = static_cast<int>(point_order(cls, cover.cubic));
  if (cover.m % lambda != 0)
    throw Error(Errc::Internal, "class order " + std::to_string(lambda) + " does not divide m");
  return SplitResult{cover.m / lambda, lambda, cls};
}

SplitResult splitting_number(const CoverSpec& cover) { return splitting_number(cover, assemble_dbc(cover)); }

int lambda_invariant(const HomogeneousForm& branch_form, const WeierstrassCurve& cubic, int m) {
  return splitting_number(CoverSpec::make(branch_form, cubic, m)).lambda;
}

// ---------------------------------------------------------------------------

DenseMatrix contact_matrix(const DivisorOnE& points, int k, int degree, const WeierstrassCurve& cubic) {
  std::size_t rows = 0;
  for (const auto& [p, c] : points.entries()) {
    if (c < 0) throw Error(Errc::InvalidInput, "contact conditions need an effective divisor");
    rows += static_cast<std::size_t>(k * c);
  }
  DenseMatrix m(cubic.field(), rows, monomial_count(degree));
  std::size_t row = 0;
  for (const auto& [p, c] : points.entries()) {
    const auto order = static_cast<std::size_t>(k * c);
    if (order == 0) continue;
    const auto branch = branch_at(cubic, p, order);
    const auto series = monomial_series(branch.coordinates, degree);
    for (std::size_t i = 0; i < order; ++i, ++row)
      for (std::size_t col = 0; col < series.size(); ++col) m.set(row, col, series[col][i]);
  }
  return m;
}

LevelEvidence principality_witness(const ReducedBranchDivisor& dbc, int k, const WeierstrassCurve& cubic) {
  if (k < 1) throw Error(Errc::InvalidInput, "level k must be positive");
  const int degree = k * dbc.n;
  const DenseMatrix m = contact_matrix(dbc.divisor, k, degree, cubic);
  const auto kernel = kernel_basis(m);

  LevelEvidence ev{k, {m.rows(), m.cols(), m.cols() - kernel.size(), monomial_count(degree - 3)}, std::nullopt};
  if (ev.rank.kernel_dim() < ev.rank.multiples_dim)
    throw Error(Errc::Internal, "kernel misses multiples of the cubic");
  for (const auto& v : kernel) {
    auto rem = cubic.reduce(HomogeneousForm::from_vector(cubic.field(), degree, v)).remainder;
    if (!rem.is_zero()) {
      ev.witness = rem.monic();
      break;
    }
  }
  return ev;
}

bool verify_witness(const HomogeneousForm& g, const ReducedBranchDivisor& dbc, int k,
                    const WeierstrassCurve& cubic) {
  if (g.degree() != k * dbc.n) return false;
  IntersectionDivisor cut;
  try {
    cut = intersection_divisor(g, cubic);
  } catch (const Error& e) {
    if (e.code() == Errc::NonRationalIntersection) return false;
    throw;
  }
  std::map<EPoint, int> expected;
  for (const auto& [p, c] : dbc.divisor.entries()) expected.emplace(p, static_cast<int>(c * k));
  return cut.entries == expected;
}

std::vector<LevelEvidence> interpolation_levels(const CoverSpec& cover, const ReducedBranchDivisor& dbc) {
  std::vector<LevelEvidence> levels;
  for (int k = 1; k <= cover.m; ++k) {
    levels.push_back(principality_witness(dbc, k, cover.cubic));
    if (levels.back().witness) return levels;
  }
  throw Error(Errc::Internal, "no interpolating curve up to level m; m D is not cut out by a curve");
}

int splitting_number_oracle(const CoverSpec& cover) {
  const auto levels = interpolation_levels(cover, assemble_dbc(cover));
  const int least = levels.back().k;
  if (cover.m % least != 0)
    throw Error(Errc::Internal, "least interpolation level " + std::to_string(least) + " does not divide m");
  return cover.m / least;
}

}  // namespace cycsplit
