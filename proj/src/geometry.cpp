// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/geometry.hpp"

#include <string>

namespace cycsplit {

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(monomial_count(d));
  for (int x = d; x >= 0; --x)
    for (int y = d - x; y >= 0; --y) out.push_back({x, y, d - x - y});
  return out;
}

std::size_t monomial_count(int d) noexcept {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * (d + 2) / 2;
}

namespace {

// Position of m inside monomials_of_degree(m.degree()).
std::size_t monomial_index(const Monomial& m) {
  const int d = m.degree();
  const int before_x = d - m.x;  // blocks with larger x have sizes 1..before_x
  return static_cast<std::size_t>(before_x) * (before_x + 1) / 2 + (d - m.x - m.y);
}

}  // namespace

// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(const PrimeField& field, std::uint32_t x, std::uint32_t y, std::uint32_t z)
    : field_(field), c_{field.reduce(x), field.reduce(y), field.reduce(z)} {
  int last = 2;
  while (last >= 0 && c_[last] == 0) --last;
  if (last < 0) throw Error(Errc::InvalidInput, "projective point with all coordinates zero");
  const std::uint32_t s = field_.inv(c_[last]);
  for (auto& v : c_) v = field_.mul(v, s);
}

int ProjPoint::chart() const noexcept {
  for (int i = 2; i >= 0; --i)
    if (c_[i] != 0) return i;
  return 2;
}

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(const PrimeField& field, int degree) : field_(field), degree_(degree) {
  if (degree < 0) throw Error(Errc::InvalidInput, "form degree must be non-negative");
}

void HomogeneousForm::check_field(const HomogeneousForm& o) const {
  if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "forms over different fields");
}

std::uint32_t HomogeneousForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void HomogeneousForm::set(const Monomial& m, std::int64_t c) {
  if (m.x < 0 || m.y < 0 || m.z < 0 || m.degree() != degree_)
    throw Error(Errc::InvalidInput, "term exponents do not sum to the form degree " +
                                        std::to_string(degree_));
  const std::uint32_t v = field_.reduce(c);
  if (v == 0)
    terms_.erase(m);
  else
    terms_[m] = v;
}

void HomogeneousForm::add_to(const Monomial& m, std::uint32_t c) {
  set(m, static_cast<std::int64_t>(field_.add(coefficient(m), field_.reduce(c))));
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
  check_field(o);
  if (degree_ != o.degree_) throw Error(Errc::InvalidInput, "adding forms of different degrees");
  HomogeneousForm r = *this;
  for (const auto& [m, c] : o.terms_) r.add_to(m, c);
  return r;
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const {
  return *this + o.scaled(field_.neg(1));
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& o) const {
  check_field(o);
  HomogeneousForm r(field_, degree_ + o.degree_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_to({a.x + b.x, a.y + b.y, a.z + b.z}, field_.mul(ca, cb));
  return r;
}

HomogeneousForm HomogeneousForm::scaled(std::uint32_t c) const {
  HomogeneousForm r(field_, degree_);
  c = field_.reduce(c);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = field_.mul(v, c);
  return r;
}

HomogeneousForm HomogeneousForm::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.begin()->second));
}

HomogeneousForm HomogeneousForm::partial(int var) const {
  HomogeneousForm r(field_, degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [m, c] : terms_) {
    const int e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    (var == 0 ? d.x : var == 1 ? d.y : d.z) -= 1;
    r.add_to(d, field_.mul(c, field_.reduce(e)));
  }
  return r;
}

std::uint32_t HomogeneousForm::evaluate(const std::array<std::uint32_t, 3>& xyz) const {
  std::array<std::vector<std::uint32_t>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].resize(degree_ + 1);
    pw[v][0] = 1;
    for (int e = 1; e <= degree_; ++e) pw[v][e] = field_.mul(pw[v][e - 1], field_.reduce(xyz[v]));
  }
  std::uint32_t acc = 0;
  for (const auto& [m, c] : terms_)
    acc = field_.add(acc, field_.mul(c, field_.mul(pw[0][m.x], field_.mul(pw[1][m.y], pw[2][m.z]))));
  return acc;
}

std::vector<TruncSeries> monomial_series(const std::array<TruncSeries, 3>& xyz, int d) {
  const auto& f = xyz[0].field();
  std::size_t prec = std::min({xyz[0].precision(), xyz[1].precision(), xyz[2].precision()});
  std::array<std::vector<TruncSeries>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back(TruncSeries::constant(f, 1, prec));
    for (int e = 1; e <= d; ++e) pw[v].push_back(pw[v].back() * xyz[v]);
  }
  std::vector<TruncSeries> out;
  for (const auto& m : monomials_of_degree(d)) out.push_back(pw[0][m.x] * pw[1][m.y] * pw[2][m.z]);
  return out;
}

TruncSeries HomogeneousForm::evaluate(const std::array<TruncSeries, 3>& xyz) const {
  for (const auto& s : xyz)
    if (!(s.field() == field_)) throw Error(Errc::FieldMismatch, "series and form over different fields");
  std::size_t prec = std::min({xyz[0].precision(), xyz[1].precision(), xyz[2].precision()});
  std::array<std::vector<TruncSeries>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back(TruncSeries::constant(field_, 1, prec));
    for (int e = 1; e <= degree_; ++e) pw[v].push_back(pw[v].back() * xyz[v]);
  }
  TruncSeries acc(field_, prec);
  for (const auto& [m, c] : terms_) acc = acc + (pw[0][m.x] * pw[1][m.y] * pw[2][m.z]).scaled(c);
  return acc;
}

std::vector<std::uint32_t> HomogeneousForm::to_vector() const {
  std::vector<std::uint32_t> v(monomial_count(degree_), 0);
  for (const auto& [m, c] : terms_) v[monomial_index(m)] = c;
  return v;
}

HomogeneousForm HomogeneousForm::from_vector(const PrimeField& field, int degree,
                                             std::span<const std::uint32_t> v) {
  const auto basis = monomials_of_degree(degree);
  if (v.size() != basis.size()) throw Error(Errc::InvalidInput, "coefficient vector has wrong length");
  HomogeneousForm f(field, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) f.set(basis[i], v[i]);
  return f;
}

Scalar evaluate_form(const HomogeneousForm& f, const ProjPoint& p) {
  if (!(f.field() == p.field())) throw Error(Errc::FieldMismatch, "form and point over different fields");
  return Scalar(f.field(), f.evaluate(p.coords()));
}

// ---------------------------------------------------------------------------

BranchParametrization local_parametrization(const HomogeneousForm& curve, const ProjPoint& p,
                                            std::size_t precision, ChartChoice choice) {
  const auto& f = curve.field();
  if (!(f == p.field())) throw Error(Errc::FieldMismatch, "curve and point over different fields");
  if (precision == 0) throw Error(Errc::InvalidInput, "branch precision must be positive");
  if (curve.evaluate(p.coords()) != 0) throw Error(Errc::NotOnCurve, "point is not on the curve");

  const int chart = choice.chart.value_or(p.chart());
  if (chart < 0 || chart > 2 || p[chart] == 0)
    throw Error(Errc::InvalidInput, "chart coordinate must be nonzero at the center");
  std::array<std::uint32_t, 3> center = p.coords();
  const std::uint32_t s = f.inv(center[chart]);
  for (auto& c : center) c = f.mul(c, s);

  const std::array<HomogeneousForm, 3> grad{curve.partial(0), curve.partial(1), curve.partial(2)};
  int dependent = -1;
  if (choice.dependent) {
    dependent = *choice.dependent;
    if (dependent < 0 || dependent > 2 || dependent == chart)
      throw Error(Errc::InvalidInput, "dependent coordinate must differ from the chart");
    if (grad[dependent].evaluate(center) == 0)
      throw Error(Errc::InvalidInput, "dependent coordinate has a vanishing partial at the center");
  } else {
    for (int v = 2; v >= 0 && dependent < 0; --v)
      if (v != chart && grad[v].evaluate(center) != 0) dependent = v;
  }
  if (dependent < 0) throw Error(Errc::SingularPoint, "center is a singular point of the curve");
  const int independent = 3 - chart - dependent;

  auto build = [&](std::size_t prec, const TruncSeries& dep) {
    std::array<TruncSeries, 3> xyz{TruncSeries(f, prec), TruncSeries(f, prec), TruncSeries(f, prec)};
    xyz[chart] = TruncSeries::constant(f, 1, prec);
    xyz[independent] = TruncSeries::linear(f, center[independent], prec);
    xyz[dependent] = dep;
    return xyz;
  };

  // Newton iteration dep <- dep - C / (dC/d dep), doubling the correct prefix.
  TruncSeries dep = TruncSeries::constant(f, center[dependent], 1);
  std::size_t known = 1;
  while (known < precision) {
    const std::size_t next = std::min(2 * known, precision);
    std::vector<std::uint32_t> ext(next, 0);
    for (std::size_t i = 0; i < known; ++i) ext[i] = dep[i];
    TruncSeries lifted(f, std::move(ext));
    const auto xyz = build(next, lifted);
    const TruncSeries value = curve.evaluate(xyz);
    const TruncSeries slope = grad[dependent].evaluate(xyz);
    dep = lifted - value * slope.inverse();
    known = next;
  }

  return BranchParametrization{ProjPoint(f, center[0], center[1], center[2]), chart, independent,
                               dependent, build(precision, dep)};
}

int intersection_multiplicity(const HomogeneousForm& f, const BranchParametrization& branch) {
  const Valuation v = series_valuation(f.evaluate(branch.coordinates));
  if (!v.exact)
    throw Error(Errc::PrecisionExhausted,
                "form vanishes along the branch to precision " + std::to_string(v.value));
  return static_cast<int>(v.value);
}

// ---------------------------------------------------------------------------

std::optional<ProjPoint> find_rational_singular_point(const HomogeneousForm& f) {
  const auto& field = f.field();
  const std::array<HomogeneousForm, 3> grad{f.partial(0), f.partial(1), f.partial(2)};
  auto singular = [&](const std::array<std::uint32_t, 3>& c) {
    return f.evaluate(c) == 0 && grad[0].evaluate(c) == 0 && grad[1].evaluate(c) == 0 &&
           grad[2].evaluate(c) == 0;
  };
  const std::uint32_t p = field.modulus();
  if (singular({1, 0, 0})) return ProjPoint(field, 1, 0, 0);
  for (std::uint32_t x = 0; x < p; ++x)
    if (singular({x, 1, 0})) return ProjPoint(field, x, 1, 0);
  for (std::uint32_t y = 0; y < p; ++y)
    for (std::uint32_t x = 0; x < p; ++x)
      if (singular({x, y, 1})) return ProjPoint(field, x, y, 1);
  return std::nullopt;
}

namespace {

constexpr std::uint32_t kWitnessScanLimit = 2003;

void append_multiples(DenseMatrix& m, std::size_t& row, const HomogeneousForm& g, int target) {
  for (const auto& mono : monomials_of_degree(target - g.degree())) {
    for (const auto& [t, c] : g.terms())
      m.set(row, monomial_index({t.x + mono.x, t.y + mono.y, t.z + mono.z}), c);
    ++row;
  }
}

}  // namespace

SmoothnessReport curve_is_smooth(const HomogeneousForm& f) {
  if (f.degree() < 1) throw Error(Errc::InvalidInput, "smoothness needs a form of degree >= 1");
  if (f.is_zero()) throw Error(Errc::InvalidInput, "zero form does not define a curve");
  SmoothnessReport report;
  const int d = f.degree();
  if (d == 1) {
    report.smooth = true;
    report.degree = 0;
    return report;
  }
  // With p | d the Euler relation fails and F must carry its own weight: three
  // generic elements of the ideal in degree d form a regular sequence, so the
  // ideal is full from degree 3d - 2.
  const int target = d % f.field().modulus() == 0 ? 3 * d - 2 : 3 * d - 4;
  const std::array<HomogeneousForm, 3> grad{f.partial(0), f.partial(1), f.partial(2)};
  std::size_t rows = monomial_count(target - d) + 3 * monomial_count(target - d + 1);
  DenseMatrix m(f.field(), rows, monomial_count(target));
  std::size_t row = 0;
  append_multiples(m, row, f, target);
  for (const auto& g : grad) append_multiples(m, row, g, target);

  report.degree = target;
  report.rows = m.rows();
  report.cols = m.cols();
  report.rank = matrix_rank(m);
  report.smooth = report.rank == report.cols;
  if (!report.smooth && f.field().modulus() <= kWitnessScanLimit)
    report.singular_point = find_rational_singular_point(f);
  return report;
}

}  // namespace cycsplit
