// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cycsplit {

namespace {

std::string point_text(const EPoint& p) {
  return p.is_infinity() ? "O" : "(" + std::to_string(p.x()) + "," + std::to_string(p.y()) + ")";
}

DivisorOnE reduced_sum(const std::vector<EPoint>& points) {
  DivisorOnE d;
  for (const auto& p : points) d.add(p, 1);
  return d;
}

// One candidate point set; nullopt when the draw degenerates.
std::optional<std::vector<EPoint>> draw_points(const ConstructionRequest& req, const EPoint& target,
                                               std::mt19937_64& rng) {
  const auto& pts = req.curve.points();
  const std::size_t count = 3 * static_cast<std::size_t>(req.n());
  std::vector<std::size_t> idx(pts.size() - 1);
  std::iota(idx.begin(), idx.end(), 1);
  if (idx.size() < count) return std::nullopt;

  std::vector<EPoint> chosen;
  EPoint sum = EPoint::infinity();
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const std::size_t j = i + uniform_below(rng, idx.size() - i);
    std::swap(idx[i], idx[j]);
    chosen.push_back(pts[idx[i]]);
    sum = add_points(sum, chosen.back(), req.curve);
  }
  const EPoint last = add_points(target, negate(sum, req.curve), req.curve);
  if (last.is_infinity() || std::find(chosen.begin(), chosen.end(), last) != chosen.end())
    return std::nullopt;
  chosen.push_back(last);
  if (req.n() == 1) {
    std::set<std::uint32_t> xs;
    for (const auto& p : chosen) xs.insert(p.x());
    if (xs.size() != chosen.size()) return std::nullopt;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

HomogeneousForm random_member(const InterpolationSpace& space, const ConstructionRequest& req,
                              std::mt19937_64& rng) {
  const auto& f = req.curve.field();
  std::vector<std::uint32_t> v(monomial_count(req.b), 0);
  for (const auto& basis : space.kernel) {
    const auto c = static_cast<std::uint32_t>(uniform_below(rng, f.modulus()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, basis[i]));
  }
  return HomogeneousForm::from_vector(f, req.b, v);
}

// Empty string on success, else the name of the failing screen.
std::string screen_candidate(const HomogeneousForm& g, const std::vector<EPoint>& points,
                             const ConstructionRequest& req) {
  if (g.is_zero() || req.curve.reduce(g).remainder.is_zero()) return "cubic_multiple";
  try {
    const auto cut = intersection_divisor(g, req.curve);
    std::map<EPoint, int> expected;
    for (const auto& p : points) expected.emplace(p, req.m);
    if (cut.entries != expected) return "exact_divisor";
  } catch (const Error&) {
    return "exact_divisor";
  }
  if (!curve_is_smooth(g).smooth) return "smoothness";
  return {};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

void ConstructionRequest::validate() const {
  if (b < 3) throw Error(Errc::InvalidInput, "b must be at least 3");
  if (m < 1 || b % m != 0) throw Error(Errc::InvalidInput, "m must be a positive divisor of b");
  if (mu < 1 || m % mu != 0) throw Error(Errc::InvalidInput, "mu must be a positive divisor of m");
  if (retry_budget < 1) throw Error(Errc::InvalidInput, "retry budget must be positive");
  if (std::gcd<std::uint64_t, std::uint64_t>(curve.field().modulus(), 6ull * m) != 1)
    throw Error(Errc::InvalidCover, "p must be prime to 6m");
}

std::vector<EPoint> sample_divisor_with_class(const ConstructionRequest& req, std::mt19937_64& rng) {
  req.validate();
  const EPoint target = find_point_of_order(req.curve, req.mu, {req.seed});
  for (int attempt = 0; attempt < req.retry_budget; ++attempt)
    if (auto pts = draw_points(req, target, rng)) return *pts;
  throw Error(Errc::RetryExhausted,
              "no admissible set of " + std::to_string(3 * req.n()) + " points within the retry budget",
              "sample");
}

std::vector<EPoint> sample_divisor_with_class(const ConstructionRequest& req) {
  std::mt19937_64 rng(req.seed);
  return sample_divisor_with_class(req, rng);
}

InterpolationSpace interpolation_space(const std::vector<EPoint>& points, const ConstructionRequest& req) {
  const DenseMatrix m = contact_matrix(reduced_sum(points), req.m, req.b, req.curve);
  InterpolationSpace space{kernel_basis(m), {m.rows(), m.cols(), 0, monomial_count(req.b - 3)}};
  space.rank.rank = m.cols() - space.kernel.size();
  if (space.rank.kernel_dim() <= space.rank.multiples_dim)
    throw Error(Errc::EmptyKernel, "only multiples of the cubic have the requested contact; the class of the "
                                   "points minus nH is not m-torsion");
  return space;
}

HomogeneousForm interpolate_branched_curve(const std::vector<EPoint>& points, const ConstructionRequest& req) {
  req.validate();
  const auto space = interpolation_space(points, req);
  std::mt19937_64 rng(req.seed);
  std::string failing = "none";
  std::optional<HomogeneousForm> best;
  for (int attempt = 0; attempt < req.retry_budget; ++attempt) {
    HomogeneousForm g = random_member(space, req, rng);
    failing = screen_candidate(g, points, req);
    if (failing.empty()) return g.monic();
    if (failing == "smoothness") best = g;
  }
  std::ostringstream msg;
  msg << "no candidate passed the screens within " << req.retry_budget << " draws; last failing check: " << failing;
  if (best) msg << "; best candidate: " << form_to_json(*best).dump();
  throw Error(Errc::RetryExhausted, msg.str(), failing);
}

// ---------------------------------------------------------------------------

bool TypeBMReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.pass; });
}

Json TypeBMReport::to_json() const {
  Json checks_json = Json::object();
  for (const auto& [name, c] : checks) checks_json[name] = {{"pass", c.pass}, {"evidence", c.evidence}};
  return Json{{"checks", checks_json}, {"pass", passed()}};
}

TypeBMReport verify_type_bm(const HomogeneousForm& branch, const WeierstrassCurve& cubic, int b, int m) {
  TypeBMReport r;
  const bool degrees_ok = branch.degree() == b && b >= 3 && m >= 1 && b % m == 0;
  r.checks["degrees"] = {degrees_ok, "deg B = " + std::to_string(branch.degree()) + ", b = " + std::to_string(b) +
                                         ", m = " + std::to_string(m) + ", deg E = 3"};
  const int n = (m >= 1 && b % m == 0) ? b / m : 0;

  const bool multiple = branch.is_zero() || cubic.reduce(branch).remainder.is_zero();
  r.checks["components"] = {!multiple, multiple ? "B contains E as a component" : "B and E share no component"};

  std::string smooth_ev = "disc(E) = " + std::to_string(cubic.discriminant());
  bool smooth_ok = cubic.discriminant() != 0;
  if (!branch.is_zero() && branch.degree() >= 1) {
    const auto s = curve_is_smooth(branch);
    smooth_ok = smooth_ok && s.smooth;
    smooth_ev += "; Macaulay rank of (B, dB) in degree " + std::to_string(s.degree) + ": " +
                 std::to_string(s.rank) + "/" + std::to_string(s.cols);
    if (s.singular_point) {
      const auto& c = s.singular_point->coords();
      smooth_ev += "; singular point [" + std::to_string(c[0]) + ":" + std::to_string(c[1]) + ":" +
                   std::to_string(c[2]) + "]";
    }
  } else {
    smooth_ok = false;
  }
  r.checks["smoothness"] = {smooth_ok, smooth_ev};

  if (multiple) {
    r.checks["point_count"] = {false, "CommonComponent"};
    r.checks["multiplicity"] = {false, "CommonComponent"};
    return r;
  }
  try {
    const auto cut = intersection_divisor(branch, cubic);
    r.checks["point_count"] = {static_cast<int>(cut.entries.size()) == 3 * n,
                               std::to_string(cut.entries.size()) + " points, expected " + std::to_string(3 * n)};
    std::string ev;
    bool all_m = true;
    for (const auto& [p, k] : cut.entries) {
      if (!ev.empty()) ev += ", ";
      ev += point_text(p) + ":" + std::to_string(k);
      all_m = all_m && k == m;
    }
    r.checks["multiplicity"] = {all_m, ev};
  } catch (const Error& e) {
    r.checks["point_count"] = {false, std::string(errc_name(e.code())) + ": " + e.what()};
    r.checks["multiplicity"] = {false, std::string(errc_name(e.code()))};
  }
  return r;
}

ConstructedInstance construct_curve(const ConstructionRequest& req) {
  req.validate();
  const EPoint target = find_point_of_order(req.curve, req.mu, {req.seed});
  std::mt19937_64 rng(req.seed);
  std::string failing = "sample";
  for (int attempt = 1; attempt <= req.retry_budget; ++attempt) {
    auto pts = draw_points(req, target, rng);
    if (!pts) {
      failing = "sample";
      continue;
    }
    const auto space = interpolation_space(*pts, req);
    HomogeneousForm g = random_member(space, req, rng);
    failing = screen_candidate(g, *pts, req);
    if (!failing.empty()) continue;
    g = g.monic();
    TypeBMReport report = verify_type_bm(g, req.curve, req.b, req.m);
    if (!report.passed()) {
      failing = "type_bm";
      continue;
    }
    return ConstructedInstance{std::move(g), std::move(*pts), std::move(report), attempt};
  }
  throw Error(Errc::RetryExhausted,
              "construction of a type (" + std::to_string(req.b) + "," + std::to_string(req.m) +
                  ") curve with lambda = " + std::to_string(req.mu) + " failed after " +
                  std::to_string(req.retry_budget) + " attempts; last failing check: " + failing,
              failing);
}

std::uint64_t member_seed(std::uint64_t seed, int mu) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(mu)));
}

std::vector<KpletMember> build_kplet(int b, int m, const WeierstrassCurve& curve, std::uint64_t seed,
                                     int retry_budget) {
  const auto mus = divisors_of(m);
  std::string missing;
  for (int mu : mus) {
    try {
      find_point_of_order(curve, mu, {seed});
    } catch (const Error& e) {
      if (e.code() != Errc::NoSuchOrder) throw;
      missing += (missing.empty() ? "" : ",") + std::to_string(mu);
    }
  }
  if (!missing.empty())
    throw Error(Errc::UnrealizableOrder, "no rational point of order " + missing + " on the curve", missing);

  std::vector<KpletMember> out;
  for (int mu : mus) {
    const ConstructionRequest req{b, m, mu, curve, member_seed(seed, mu), retry_budget};
    ConstructedInstance inst = construct_curve(req);
    SplittingCertificate cert =
        certify(CoverSpec::make(inst.form, curve, m), req.seed, Origin{true, mu, inst.attempt});
    if (cert.lambda != mu)
      throw Error(Errc::Internal, "constructed member has lambda " + std::to_string(cert.lambda) +
                                      ", requested " + std::to_string(mu));
    out.push_back(KpletMember{mu, std::move(inst), std::move(cert)});
  }
  return out;
}

WeierstrassCurve find_curve_for(int b, int m, std::uint32_t min_p) {
  if (m < 1 || b < 1 || b % m != 0) throw Error(Errc::InvalidInput, "m must divide b");
  const std::uint64_t n = b / m;
  for (std::uint32_t p = std::max<std::uint32_t>(min_p, 5); p < PrimeField::kMaxModulus; ++p) {
    if (!is_prime(p) || std::gcd<std::uint64_t, std::uint64_t>(p, 6ull * m) != 1) continue;
    const PrimeField f(p);
    for (std::uint32_t a4 = 0; a4 < p; ++a4) {
      for (std::uint32_t a6 = 0; a6 < p; ++a6) {
        const std::uint32_t core = f.add(f.mul(4, f.pow(a4, 3)), f.mul(27, f.mul(a6, a6)));
        if (core == 0) continue;
        WeierstrassCurve e(f, a4, a6);
        const auto order = group_order(e);
        if (order < 6 * n + 1 || order % m != 0) continue;
        try {
          find_point_of_order(e, m);
          return e;
        } catch (const Error& err) {
          if (err.code() != Errc::NoSuchOrder) throw;
        }
      }
    }
  }
  throw Error(Errc::UnrealizableOrder, "no curve with a point of order " + std::to_string(m) + " found");
}

}  // namespace cycsplit
