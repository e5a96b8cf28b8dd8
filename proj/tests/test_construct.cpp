// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <numeric>
#include <set>

#include "cycsplit/construct.hpp"

using namespace cycsplit;

namespace {

EPoint group_sum(const std::vector<EPoint>& pts, const WeierstrassCurve& e) {
  EPoint s = EPoint::infinity();
  for (const auto& p : pts) s = add_points(s, p, e);
  return s;
}

ConstructionRequest request(int b, int m, int mu, const WeierstrassCurve& e, std::uint64_t seed) {
  return ConstructionRequest{b, m, mu, e, seed, 64};
}

}  // namespace

TEST_CASE("mu = 1, n = 1 samples three collinear points") {
  const WeierstrassCurve e(PrimeField(31), 2, 9);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto pts = sample_divisor_with_class(request(3, 3, 1, e, seed));
    REQUIRE(pts.size() == 3);
    CHECK(std::set<EPoint>(pts.begin(), pts.end()).size() == 3);
    CHECK(group_sum(pts, e).is_infinity());
    CHECK(std::set<std::uint32_t>{pts[0].x(), pts[1].x(), pts[2].x()}.size() == 3);
  }
}

TEST_CASE("mu = 3 on y^2 = x^3 + 1 over F_5 gives a triple of class order 3") {
  const WeierstrassCurve e(PrimeField(5), 0, 1);
  const auto pts = sample_divisor_with_class(request(3, 3, 3, e, 4));
  DivisorOnE d;
  for (const auto& p : pts) d.add(p, 1);
  d.add(EPoint::infinity(), -3);
  CHECK(class_order(d, e) == 3);
  CHECK(point_order(group_sum(pts, e), e) == 3);
}

TEST_CASE("sampling failures") {
  const WeierstrassCurve e(PrimeField(5), 0, 1);  // group order 6
  try {
    // y^2 = x^3 + x + 3 over F_7 also has 6 points
    sample_divisor_with_class(request(5, 5, 5, WeierstrassCurve(PrimeField(7), 1, 3), 0));
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NoSuchOrder);
  }
  // 6 distinct affine points are needed but only 5 exist
  try {
    sample_divisor_with_class(ConstructionRequest{4, 2, 1, e, 0, 5});
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::RetryExhausted);
    CHECK(err.detail() == "sample");
  }
}

TEST_CASE("request validation") {
  const WeierstrassCurve e(PrimeField(13), 1, 1);
  CHECK_THROWS_AS(request(4, 3, 1, e, 0).validate(), Error);
  CHECK_THROWS_AS(request(4, 4, 3, e, 0).validate(), Error);
  CHECK_THROWS_AS(request(2, 2, 1, e, 0).validate(), Error);
  CHECK_THROWS_AS(request(13, 13, 1, e, 0).validate(), Error);
  CHECK_NOTHROW(request(4, 4, 2, e, 0).validate());
}

TEST_CASE("interpolation space dimension follows the class of the points") {
  const WeierstrassCurve e = find_curve_for(4, 4);
  for (int mu : {1, 2, 4}) {
    const auto req = request(4, 4, mu, e, 11);
    const auto pts = sample_divisor_with_class(req);
    const auto space = interpolation_space(pts, req);
    CHECK(space.kernel.size() == static_cast<std::size_t>((4 - 2) * (4 - 1) / 2 + 1));
    CHECK(space.rank.kernel_dim() == space.kernel.size());
    CHECK(space.rank.multiples_dim == 3);
  }
  // three points whose class has order 4: no conic has contact 2 at each
  const auto pts = sample_divisor_with_class(request(4, 4, 4, e, 3));
  try {
    interpolation_space(pts, ConstructionRequest{2, 2, 1, e, 3, 64});
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::EmptyKernel);
  }
}

TEST_CASE("interpolated curves cut out exactly m times the points") {
  const WeierstrassCurve e(PrimeField(61), 1, 1);
  for (auto [b, m] : std::vector<std::pair<int, int>>{{4, 2}, {4, 4}, {5, 5}}) {
    for (int mu : divisors_of(m)) {
      try {
        find_point_of_order(e, mu);
      } catch (const Error&) {
        continue;
      }
      const auto req = request(b, m, mu, e, 100 + mu);
      const auto pts = sample_divisor_with_class(req);
      const auto g = interpolate_branched_curve(pts, req);
      CHECK(g.degree() == b);
      const auto cut = intersection_divisor(g, e);
      for (const auto& p : pts) CHECK(cut.entries.at(p) == m);
      CHECK(cut.entries.size() == pts.size());
      CHECK(curve_is_smooth(g).smooth);
    }
  }
}

TEST_CASE("type (4,4) construction round trip for every target order") {
  const WeierstrassCurve e = find_curve_for(4, 4);
  for (int mu : {1, 2, 4}) {
    const auto inst = construct_curve(request(4, 4, mu, e, 7));
    CHECK(inst.report.passed());
    CHECK(inst.points.size() == 3);
    CHECK(lambda_invariant(inst.form, e, 4) == mu);
    CHECK(splitting_number_oracle(CoverSpec::make(inst.form, e, 4)) == 4 / mu);
    CHECK(inst.attempt >= 1);
  }
}

TEST_CASE("type report failures") {
  const PrimeField f(13);
  const WeierstrassCurve e(f, 1, 1);
  HomogeneousForm x(f, 1);
  x.set({1, 0, 0}, 1);
  const auto multiple = verify_type_bm(e.form() * x, e, 4, 4);
  CHECK_FALSE(multiple.passed());
  CHECK_FALSE(multiple.checks.at("components").pass);

  // A generic quartic meets the cubic transversally
  HomogeneousForm q(f, 4);
  q.set({4, 0, 0}, 1);
  q.set({0, 4, 0}, 2);
  q.set({0, 0, 4}, 3);
  q.set({1, 1, 2}, 1);
  const auto generic = verify_type_bm(q, e, 4, 4);
  CHECK_FALSE(generic.passed());
  CHECK_FALSE(generic.checks.at("multiplicity").pass);
  CHECK(generic.checks.size() == 5);

  const auto wrong_degree = verify_type_bm(q, e, 5, 5);
  CHECK_FALSE(wrong_degree.checks.at("degrees").pass);

  const auto json = generic.to_json();
  CHECK(json.at("pass") == false);
  CHECK(json.at("checks").contains("smoothness"));
}

TEST_CASE("k-plets realize every divisor of m") {
  const WeierstrassCurve e = find_curve_for(4, 4);
  const auto k44 = build_kplet(4, 4, e, 1);
  REQUIRE(k44.size() == 3);
  std::vector<int> lambdas, nus;
  for (const auto& mbr : k44) {
    lambdas.push_back(mbr.certificate.lambda);
    nus.push_back(mbr.certificate.splitting_number);
    CHECK(mbr.certificate.oracle_splitting_number == mbr.certificate.splitting_number);
    CHECK(mbr.instance.report.passed());
  }
  CHECK(lambdas == std::vector<int>{1, 2, 4});
  CHECK(nus == std::vector<int>{4, 2, 1});

  const auto k42 = build_kplet(4, 2, find_curve_for(4, 2), 1);
  REQUIRE(k42.size() == 2);
  CHECK(k42[0].certificate.lambda == 1);
  CHECK(k42[1].certificate.lambda == 2);

  const auto k41 = build_kplet(4, 1, find_curve_for(4, 1), 1);
  REQUIRE(k41.size() == 1);
  CHECK(k41[0].certificate.lambda == 1);
}

TEST_CASE("k-plets report unrealizable orders") {
  const WeierstrassCurve e(PrimeField(7), 0, 1);  // Z/2 x Z/6, no point of order 4
  try {
    build_kplet(4, 4, e, 0);
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::UnrealizableOrder);
    CHECK(err.detail() == "4");
  }
}

TEST_CASE("same seed, same output") {
  const WeierstrassCurve e = find_curve_for(6, 3);
  const auto a = construct_curve(request(6, 3, 3, e, 99));
  const auto b = construct_curve(request(6, 3, 3, e, 99));
  CHECK(a.form == b.form);
  CHECK(a.attempt == b.attempt);
  const auto ka = build_kplet(4, 4, find_curve_for(4, 4), 5);
  const auto kb = build_kplet(4, 4, find_curve_for(4, 4), 5);
  for (std::size_t i = 0; i < ka.size(); ++i)
    CHECK(serialize_certificate(ka[i].certificate) == serialize_certificate(kb[i].certificate));
  CHECK(member_seed(5, 2) != member_seed(5, 4));
}

TEST_CASE("curve search meets its requirements") {
  for (auto [b, m] : std::vector<std::pair<int, int>>{{4, 4}, {6, 6}, {8, 4}, {7, 7}, {3, 3}}) {
    const auto e = find_curve_for(b, m);
    const auto p = e.field().modulus();
    CHECK(std::gcd<std::uint64_t, std::uint64_t>(p, 6ull * m) == 1);
    CHECK(group_order(e) >= 6ull * (b / m) + 1);
    CHECK(point_order(find_point_of_order(e, m), e) == static_cast<std::uint64_t>(m));
  }
}
