// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "cycsplit/arith.hpp"

using namespace cycsplit;

namespace {

// Brute-force count of solutions of M v = 0 over a tiny field.
std::size_t count_null_vectors(const DenseMatrix& m) {
  const std::uint32_t p = m.field().modulus();
  std::vector<std::uint32_t> v(m.cols(), 0);
  std::size_t count = 0;
  while (true) {
    bool zero = true;
    for (std::uint32_t x : m.apply(v)) zero = zero && x == 0;
    count += zero;
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == p) v[i++] = 0;
    if (i == v.size()) break;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("prime field construction rejects composite and tiny moduli") {
  CHECK_NOTHROW(PrimeField(5));
  CHECK_NOTHROW(PrimeField(65521));
  for (std::uint32_t bad : {0u, 1u, 2u, 3u, 4u, 9u, 65535u, 65536u, 65537u}) {
    try {
      PrimeField f(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidField);
    }
  }
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool naive = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) naive = naive && n % d != 0;
    CHECK(is_prime(n) == naive);
  }
}

TEST_CASE("inverse of 3 in F_7 is 5") {
  const PrimeField f(7);
  CHECK(invert_scalar(Scalar(f, 3)).value() == 5);
}

TEST_CASE("inverting zero fails") {
  const PrimeField f(11);
  try {
    invert_scalar(Scalar(f, 0));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroInverse);
  }
}

TEST_CASE("field inverse matches exhaustive search") {
  for (std::uint32_t p : {5u, 7u, 13u, 101u}) {
    const PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      std::uint32_t naive = 0;
      for (std::uint32_t b = 1; b < p; ++b)
        if (a * b % p == 1) naive = b;
      CHECK(f.inv(a) == naive);
    }
  }
}

TEST_CASE("scalars stay canonical and reject mixed fields") {
  const PrimeField f(13), g(17);
  const Scalar a(f, -1), b(f, 40);
  CHECK(a.value() == 12);
  CHECK(b.value() == 1);
  CHECK((a + b).value() == 0);
  CHECK((a * a).value() == 1);
  CHECK((b / a).value() == 12);
  CHECK((-b).value() == 12);
  try {
    (void)(a + Scalar(g, 1));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
}

TEST_CASE("uniform_below stays in range and is reproducible") {
  std::mt19937_64 r1(42), r2(42);
  for (int i = 0; i < 1000; ++i) {
    const auto a = uniform_below(r1, 197);
    CHECK(a < 197);
    CHECK(a == uniform_below(r2, 197));
  }
}

TEST_CASE("series product (t + t^2) * t = t^2 + t^3") {
  const PrimeField f(7);
  const TruncSeries a(f, {0, 1, 1, 0, 0});
  const TruncSeries b(f, {0, 1, 0, 0, 0});
  CHECK(series_product(a, b) == TruncSeries(f, {0, 0, 1, 1, 0}));
}

TEST_CASE("series precision never exceeds the operands") {
  const PrimeField f(7);
  const TruncSeries a(f, {1, 2, 3, 4, 5, 6});
  const TruncSeries b(f, {1, 1, 1});
  CHECK((a * b).precision() == 3);
  CHECK((a + b).precision() == 3);
  CHECK((a - b).precision() == 3);
}

TEST_CASE("series inverse and valuation") {
  const PrimeField f(11);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint32_t> c(8);
    for (auto& x : c) x = static_cast<std::uint32_t>(uniform_below(rng, 11));
    if (c[0] == 0) c[0] = 1;
    const TruncSeries a(f, c);
    CHECK(a * a.inverse() == TruncSeries::constant(f, 1, 8));
  }
  CHECK(series_valuation(TruncSeries(f, {0, 0, 3, 1})) == Valuation{2, true});
  CHECK(series_valuation(TruncSeries(f, 4)) == Valuation{4, false});
}

TEST_CASE("kernel of the row (1, 2) over F_5 is spanned by (3, 1)") {
  const PrimeField f(5);
  DenseMatrix m(f, 1, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<std::uint32_t>{3, 1});
}

TEST_CASE("kernel basis against brute-force null space count") {
  const PrimeField f(5);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + uniform_below(rng, 4), cols = 1 + uniform_below(rng, 5);
    DenseMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m.set(r, c, uniform_below(rng, 3) == 0 ? 0 : static_cast<std::uint32_t>(uniform_below(rng, 5)));
    const auto k = kernel_basis(m);
    CHECK(matrix_rank(m) + k.size() == cols);
    for (const auto& v : k)
      for (std::uint32_t x : m.apply(v)) CHECK(x == 0);
    CHECK(count_null_vectors(m) == ipow(5, k.size()));
  }
}

TEST_CASE("rank is invariant under transposition") {
  const PrimeField f(7);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    DenseMatrix m(f, 4, 6);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) m.set(r, c, static_cast<std::uint32_t>(uniform_below(rng, 2)));
    CHECK(matrix_rank(m) == matrix_rank(m.transposed()));
  }
}

TEST_CASE("row echelon form is reduced with leftmost pivots") {
  const PrimeField f(7);
  DenseMatrix m(f, 3, 4);
  const std::uint32_t v[3][4] = {{0, 2, 4, 1}, {0, 1, 2, 3}, {3, 0, 0, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m.set(r, c, v[r][c]);
  const RowEchelon e(m);
  REQUIRE(e.rank() == 3);
  CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1, 3});
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t r = 0; r < 3; ++r) CHECK(e.reduced(r, e.pivot_columns[i]) == (r == i ? 1u : 0u));
}
