// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/arith.hpp"

#include <algorithm>
#include <utility>

namespace cycsplit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InvalidField: return "InvalidField";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NonRationalIntersection: return "NonRationalIntersection";
    case Errc::CommonComponent: return "CommonComponent";
    case Errc::NonzeroDegree: return "NonzeroDegree";
    case Errc::NoSuchOrder: return "NoSuchOrder";
    case Errc::InvalidCover: return "InvalidCover";
    case Errc::EssentiallyRamified: return "EssentiallyRamified";
    case Errc::EmptyKernel: return "EmptyKernel";
    case Errc::RetryExhausted: return "RetryExhausted";
    case Errc::UnrealizableOrder: return "UnrealizableOrder";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::Io: return "Io";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidInput, "empty sampling range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 3 || p >= kMaxModulus || !is_prime(p))
    throw Error(Errc::InvalidField,
                "modulus must be a prime with 3 < p < 65536, got " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return reduce(s0);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_, base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

const PrimeField& Scalar::checked(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(Errc::FieldMismatch, "scalars from F_" + std::to_string(field_.modulus()) +
                                         " and F_" + std::to_string(o.field_.modulus()));
  return field_;
}

Scalar Scalar::operator+(const Scalar& o) const { return Scalar(checked(o), field_.add(value_, o.value_)); }
Scalar Scalar::operator-(const Scalar& o) const { return Scalar(checked(o), field_.sub(value_, o.value_)); }
Scalar Scalar::operator*(const Scalar& o) const { return Scalar(checked(o), field_.mul(value_, o.value_)); }
Scalar Scalar::operator/(const Scalar& o) const {
  return Scalar(checked(o), field_.mul(value_, field_.inv(o.value_)));
}
Scalar Scalar::operator-() const { return Scalar(field_, field_.neg(value_)); }

Scalar invert_scalar(const Scalar& a) { return Scalar(a.field(), a.field().inv(a.value())); }

// ---------------------------------------------------------------------------

TruncSeries::TruncSeries(const PrimeField& field, std::size_t precision)
    : field_(field), coeffs_(precision, 0) {
  if (precision == 0) throw Error(Errc::InvalidInput, "series precision must be positive");
}

TruncSeries::TruncSeries(const PrimeField& field, std::vector<std::uint32_t> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidInput, "series precision must be positive");
  for (auto& c : coeffs_) c = field_.reduce(c);
}

TruncSeries TruncSeries::constant(const PrimeField& field, std::uint32_t c, std::size_t precision) {
  TruncSeries s(field, precision);
  s.coeffs_[0] = field.reduce(c);
  return s;
}

TruncSeries TruncSeries::linear(const PrimeField& field, std::uint32_t c0, std::size_t precision) {
  TruncSeries s = constant(field, c0, precision);
  if (precision > 1) s.coeffs_[1] = 1;
  return s;
}

void TruncSeries::check_field(const TruncSeries& o) const {
  if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "series over different fields");
}

TruncSeries TruncSeries::truncated(std::size_t precision) const {
  if (precision > coeffs_.size())
    throw Error(Errc::InvalidInput, "cannot raise the precision of a truncated series");
  return TruncSeries(field_, std::vector<std::uint32_t>(coeffs_.begin(), coeffs_.begin() + precision));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_field(o);
  TruncSeries r(field_, std::min(precision(), o.precision()));
  for (std::size_t i = 0; i < r.precision(); ++i) r.coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  check_field(o);
  TruncSeries r(field_, std::min(precision(), o.precision()));
  for (std::size_t i = 0; i < r.precision(); ++i) r.coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_field(o);
  const std::size_t n = std::min(precision(), o.precision());
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      acc[i + j] += static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j];
      if (acc[i + j] >= (1ull << 62)) acc[i + j] %= p;
    }
  }
  TruncSeries r(field_, n);
  for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = static_cast<std::uint32_t>(acc[i] % p);
  return r;
}

TruncSeries TruncSeries::scaled(std::uint32_t c) const {
  TruncSeries r = *this;
  for (auto& v : r.coeffs_) v = field_.mul(v, c);
  return r;
}

TruncSeries TruncSeries::inverse() const {
  const std::uint32_t c0inv = field_.inv(coeffs_[0]);
  const std::size_t n = precision();
  TruncSeries r(field_, n);
  r.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t s = 0;
    for (std::size_t j = 1; j <= k; ++j) s = field_.add(s, field_.mul(coeffs_[j], r.coeffs_[k - j]));
    r.coeffs_[k] = field_.mul(field_.neg(s), c0inv);
  }
  return r;
}

TruncSeries series_product(const TruncSeries& a, const TruncSeries& b) { return a * b; }

Valuation series_valuation(const TruncSeries& a) {
  const auto c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return {i, true};
  return {c.size(), false};
}

// ---------------------------------------------------------------------------

DenseMatrix::DenseMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  return t;
}

std::vector<std::uint32_t> DenseMatrix::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw Error(Errc::InvalidInput, "vector length does not match matrix");
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>(entries_[r * cols_ + c]) * (v[c] % field_.modulus());
      if (acc >= (1ull << 62)) acc %= field_.modulus();
    }
    out[r] = static_cast<std::uint32_t>(acc % field_.modulus());
  }
  return out;
}

RowEchelon::RowEchelon(DenseMatrix m) : reduced(std::move(m)) {
  auto& a = reduced.entries_;
  const auto& f = reduced.field_;
  const std::size_t rows = reduced.rows_, cols = reduced.cols_;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t piv = next;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != next)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + next * cols);
    const std::uint32_t s = f.inv(a[next * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[next * cols + j] = f.mul(a[next * cols + j], s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next) continue;
      const std::uint32_t factor = a[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[next * cols + j]));
    }
    pivot_columns.push_back(c);
    ++next;
  }
}

std::size_t matrix_rank(const DenseMatrix& m) { return RowEchelon(m).rank(); }

std::vector<std::vector<std::uint32_t>> kernel_basis(const DenseMatrix& m) {
  RowEchelon ech(m);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i)
      v[ech.pivot_columns[i]] = f.neg(ech.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cycsplit
