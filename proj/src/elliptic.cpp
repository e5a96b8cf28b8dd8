// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/elliptic.hpp"

#include <cmath>
#include <string>

namespace cycsplit {

namespace {

HomogeneousForm weierstrass_form(const PrimeField& f, std::uint32_t a4, std::uint32_t a6) {
  HomogeneousForm w(f, 3);
  w.set({0, 2, 1}, 1);
  w.set({3, 0, 0}, -1);
  w.set({1, 0, 2}, -static_cast<std::int64_t>(a4));
  w.set({0, 0, 3}, -static_cast<std::int64_t>(a6));
  return w;
}

std::vector<EPoint> enumerate_points(const PrimeField& f, std::uint32_t a4, std::uint32_t a6) {
  const std::uint32_t p = f.modulus();
  // roots[v] lists the square roots of v
  std::vector<std::vector<std::uint32_t>> roots(p);
  for (std::uint32_t y = 0; y < p; ++y) roots[f.mul(y, y)].push_back(y);
  std::vector<EPoint> pts{EPoint::infinity()};
  for (std::uint32_t x = 0; x < p; ++x) {
    const std::uint32_t rhs = f.add(f.mul(f.mul(x, x), x), f.add(f.mul(a4, x), a6));
    for (auto y : roots[rhs]) pts.push_back(EPoint::affine(x, y));
  }
  return pts;
}

void require_on_curve(const EPoint& p, const WeierstrassCurve& e) {
  if (!e.contains(p))
    throw Error(Errc::NotOnCurve, "point (" + std::to_string(p.x()) + ", " + std::to_string(p.y()) +
                                      ") is not on the curve");
}

EPoint add_unchecked(const EPoint& p, const EPoint& q, const WeierstrassCurve& e) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const auto& f = e.field();
  std::uint32_t slope;
  if (p.x() == q.x()) {
    if (f.add(p.y(), q.y()) == 0) return EPoint::infinity();
    // tangent: (3x^2 + a4) / 2y
    slope = f.mul(f.add(f.mul(3, f.mul(p.x(), p.x())), e.a4()), f.inv(f.mul(2, p.y())));
  } else {
    slope = f.mul(f.sub(q.y(), p.y()), f.inv(f.sub(q.x(), p.x())));
  }
  const std::uint32_t x3 = f.sub(f.sub(f.mul(slope, slope), p.x()), q.x());
  const std::uint32_t y3 = f.sub(f.mul(slope, f.sub(p.x(), x3)), p.y());
  return EPoint::affine(x3, y3);
}

EPoint multiply_unchecked(std::int64_t k, EPoint p, const WeierstrassCurve& e) {
  if (k < 0) {
    p = negate(p, e);
    k = -k;
  }
  EPoint acc = EPoint::infinity();
  while (k) {
    if (k & 1) acc = add_unchecked(acc, p, e);
    p = add_unchecked(p, p, e);
    k >>= 1;
  }
  return acc;
}

std::uint64_t order_unchecked(const EPoint& p, const WeierstrassCurve& e) {
  std::uint64_t ord = group_order(e);
  for (const auto& [q, exp] : factorize(ord)) {
    for (int i = 0; i < exp; ++i) {
      if (!multiply_unchecked(static_cast<std::int64_t>(ord / q), p, e).is_infinity()) break;
      ord /= q;
    }
  }
  return ord;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(const PrimeField& field, std::uint32_t a4, std::uint32_t a6)
    : field_(field), a4_(field.reduce(a4)), a6_(field.reduce(a6)) {
  if (a4 >= field.modulus() || a6 >= field.modulus())
    throw Error(Errc::InvalidInput, "curve coefficients must lie in [0, p)");
  if (discriminant() == 0)
    throw Error(Errc::SingularCurve, "4 a4^3 + 27 a6^2 vanishes; the cubic is singular");
  form_ = std::make_shared<const HomogeneousForm>(weierstrass_form(field_, a4_, a6_));
  points_ = std::make_shared<const std::vector<EPoint>>(enumerate_points(field_, a4_, a6_));

  const double n = static_cast<double>(points_->size());
  const double p = field_.modulus();
  if (std::abs(n - (p + 1)) > 2 * std::sqrt(p) + 1e-9)
    throw Error(Errc::Internal, "point count outside the Hasse interval");
}

std::uint32_t WeierstrassCurve::discriminant() const noexcept {
  const auto& f = field_;
  const std::uint32_t core = f.add(f.mul(4, f.mul(a4_, f.mul(a4_, a4_))), f.mul(27, f.mul(a6_, a6_)));
  return f.mul(f.neg(16 % f.modulus()), core);
}

bool WeierstrassCurve::contains(const EPoint& p) const noexcept {
  if (p.is_infinity()) return true;
  const auto& f = field_;
  if (p.x() >= f.modulus() || p.y() >= f.modulus()) return false;
  const std::uint32_t rhs = f.add(f.mul(f.mul(p.x(), p.x()), p.x()), f.add(f.mul(a4_, p.x()), a6_));
  return f.mul(p.y(), p.y()) == rhs;
}

ProjPoint WeierstrassCurve::to_projective(const EPoint& p) const {
  require_on_curve(p, *this);
  return p.is_infinity() ? ProjPoint(field_, 0, 1, 0) : ProjPoint(field_, p.x(), p.y(), 1);
}

EPoint WeierstrassCurve::from_projective(const ProjPoint& p) const {
  if (!(p.field() == field_)) throw Error(Errc::FieldMismatch, "point over a different field");
  if (p[2] == 0) {
    if (p[0] != 0) throw Error(Errc::NotOnCurve, "point at infinity other than O");
    return EPoint::infinity();
  }
  const EPoint q = EPoint::affine(p[0], p[1]);
  require_on_curve(q, *this);
  return q;
}

WeierstrassCurve::Reduction WeierstrassCurve::reduce(const HomogeneousForm& g) const {
  if (!(g.field() == field_)) throw Error(Errc::FieldMismatch, "form over a different field");
  HomogeneousForm rem = g;
  HomogeneousForm quo(field_, g.degree() >= 3 ? g.degree() - 3 : 0);
  // Leading term Y^2 Z; repeatedly cancel the first term divisible by it.
  for (;;) {
    auto it = rem.terms().begin();
    for (; it != rem.terms().end(); ++it)
      if (it->first.y >= 2 && it->first.z >= 1) break;
    if (it == rem.terms().end()) break;
    const Monomial m{it->first.x, it->first.y - 2, it->first.z - 1};
    HomogeneousForm q(field_, m.degree());
    q.set(m, it->second);
    quo = quo + q;
    rem = rem - q * form();
  }
  return {quo, rem};
}

// ---------------------------------------------------------------------------

EPoint negate(const EPoint& p, const WeierstrassCurve& e) {
  if (p.is_infinity()) return p;
  return EPoint::affine(p.x(), e.field().neg(p.y()));
}

EPoint add_points(const EPoint& p, const EPoint& q, const WeierstrassCurve& e) {
  require_on_curve(p, e);
  require_on_curve(q, e);
  return add_unchecked(p, q, e);
}

EPoint scalar_multiply(std::int64_t k, const EPoint& p, const WeierstrassCurve& e) {
  require_on_curve(p, e);
  return multiply_unchecked(k, p, e);
}

std::uint64_t group_order(const WeierstrassCurve& e) { return e.points().size(); }

std::uint64_t point_order(const EPoint& p, const WeierstrassCurve& e) {
  require_on_curve(p, e);
  return order_unchecked(p, e);
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    int k = 0;
    while (n % q == 0) {
      n /= q;
      ++k;
    }
    if (k) out.emplace_back(q, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<int> divisors_of(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------

void DivisorOnE::add(const EPoint& p, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = entries_.emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t DivisorOnE::degree() const noexcept {
  std::int64_t d = 0;
  for (const auto& [p, c] : entries_) d += c;
  return d;
}

DivisorOnE DivisorOnE::operator+(const DivisorOnE& o) const {
  DivisorOnE r = *this;
  for (const auto& [p, c] : o.entries_) r.add(p, c);
  return r;
}

DivisorOnE DivisorOnE::scaled(std::int64_t k) const {
  DivisorOnE r;
  for (const auto& [p, c] : entries_) r.add(p, c * k);
  return r;
}

EPoint divisor_class_point(const DivisorOnE& d, const WeierstrassCurve& e) {
  if (d.degree() != 0)
    throw Error(Errc::NonzeroDegree, "divisor has degree " + std::to_string(d.degree()));
  EPoint sum = EPoint::infinity();
  for (const auto& [p, c] : d.entries()) {
    require_on_curve(p, e);
    sum = add_unchecked(sum, multiply_unchecked(c, p, e), e);
  }
  return sum;
}

std::uint64_t class_order(const DivisorOnE& d, const WeierstrassCurve& e) {
  return order_unchecked(divisor_class_point(d, e), e);
}

EPoint find_point_of_order(const WeierstrassCurve& e, std::uint64_t mu, PointSearch search) {
  if (mu == 0) throw Error(Errc::InvalidInput, "order must be positive");
  if (mu == 1) return EPoint::infinity();
  const std::uint64_t n = group_order(e);
  auto fail = [&] {
    return Error(Errc::NoSuchOrder, "no rational point of order " + std::to_string(mu) +
                                        " (group order " + std::to_string(n) + ")",
                 std::to_string(mu));
  };
  if (n % mu != 0) throw fail();
  const auto& pts = e.points();
  std::mt19937_64 rng(search.seed);
  for (int i = 0; i < search.random_tries; ++i) {
    const EPoint q = multiply_unchecked(static_cast<std::int64_t>(n / mu), pts[uniform_below(rng, pts.size())], e);
    if (order_unchecked(q, e) == mu) return q;
  }
  for (const auto& p : pts)
    if (order_unchecked(p, e) == mu) return p;
  throw fail();
}

}  // namespace cycsplit
