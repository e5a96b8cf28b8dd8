// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic over a small prime field F_p: scalars, truncated power
// series in one variable, and dense matrices with a deterministic kernel.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cycsplit/error.hpp"

namespace cycsplit {

/// The ground field F_p, 3 < p < 2^16.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws ZeroInverse for a = 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Uniform integer in [0, bound). Portable across standard libraries, unlike
/// std::uniform_int_distribution, so seeded runs reproduce bit for bit.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

class Scalar {
 public:
  Scalar(const PrimeField& field, std::int64_t value)
      : value_(field.reduce(value)), field_(field) {}

  std::uint32_t value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  const PrimeField& checked(const Scalar& o) const;

  std::uint32_t value_;
  PrimeField field_;
};

Scalar invert_scalar(const Scalar& a);

/// Power series in t known modulo t^precision.
class TruncSeries {
 public:
  /// Zero series with the given precision.
  TruncSeries(const PrimeField& field, std::size_t precision);
  TruncSeries(const PrimeField& field, std::vector<std::uint32_t> coefficients);

  static TruncSeries constant(const PrimeField& field, std::uint32_t c, std::size_t precision);
  /// c0 + t, the usual local parameter shifted to c0.
  static TruncSeries linear(const PrimeField& field, std::uint32_t c0, std::size_t precision);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const std::uint32_t> coefficients() const noexcept { return coeffs_; }
  void set(std::size_t i, std::uint32_t v) { coeffs_.at(i) = field_.reduce(v); }

  TruncSeries truncated(std::size_t precision) const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(std::uint32_t c) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  void check_field(const TruncSeries& o) const;

  PrimeField field_;
  std::vector<std::uint32_t> coeffs_;
};

TruncSeries series_product(const TruncSeries& a, const TruncSeries& b);

/// Order of vanishing. `exact == false` means every stored coefficient is
/// zero and the true valuation is at least `value` (= precision).
struct Valuation {
  std::size_t value;
  bool exact;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation series_valuation(const TruncSeries& a);

class DenseMatrix {
 public:
  DenseMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    entries_.at(r * cols_ + c) = field_.reduce(v);
  }
  Scalar at(std::size_t r, std::size_t c) const { return Scalar(field_, (*this)(r, c)); }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return std::span<const std::uint32_t>(entries_).subspan(r * cols_, cols_);
  }

  DenseMatrix transposed() const;
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;

 private:
  friend struct RowEchelon;

  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> entries_;
};

/// Reduced row echelon form with leftmost-nonzero pivoting; rows are
/// visited in their stored order.
struct RowEchelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_columns;

  explicit RowEchelon(DenseMatrix m);
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

std::size_t matrix_rank(const DenseMatrix& m);

/// Basis of the right null space, one vector per free column (that column
/// set to 1), in increasing free-column order.
std::vector<std::vector<std::uint32_t>> kernel_basis(const DenseMatrix& m);

}  // namespace cycsplit
