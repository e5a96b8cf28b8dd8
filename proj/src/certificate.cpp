// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/certificate.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <set>

#include "cycsplit/construct.hpp"

namespace cycsplit {

namespace {

constexpr const char* kFieldLabel = "prime field F_p as a computational proxy for the complex plane";
constexpr const char* kCriterionLabel = "interpolation criterion";
constexpr const char* kWithin = "within theorem hypotheses";
constexpr const char* kOutside = "outside theorem hypotheses";

Json rank_to_json(const RankEvidence& r) {
  return Json{{"rows", r.rows}, {"cols", r.cols}, {"rank", r.rank}, {"multiples_dim", r.multiples_dim}};
}

Json origin_to_json(const Origin& o) {
  if (!o.constructed) return Json{{"kind", "input"}};
  return Json{{"kind", "construct"}, {"mu", o.mu}, {"attempt", o.attempt}};
}

struct CheckFailure {
  std::string check;
  std::string message;
};

void require_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& check) {
  if (!j.is_object()) throw CheckFailure{check, "expected an object"};
  std::set<std::string> want(keys.begin(), keys.end());
  std::set<std::string> have;
  for (const auto& [k, v] : j.items()) have.insert(k);
  if (want != have) throw CheckFailure{check, "unexpected or missing fields"};
}

void require_same(const Json& recorded, const Json& expected, const std::string& check, const std::string& what) {
  if (canonical_dump(recorded) != canonical_dump(expected))
    throw CheckFailure{check, what + " does not match the recomputed value " + canonical_dump(expected)};
}

Origin origin_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw CheckFailure{"origin", "origin needs a string \"kind\""};
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "input") {
    require_keys(j, {"kind"}, "origin");
    return {};
  }
  if (kind != "construct") throw CheckFailure{"origin", "unknown origin kind \"" + kind + "\""};
  require_keys(j, {"kind", "mu", "attempt"}, "origin");
  Origin o;
  o.constructed = true;
  o.mu = static_cast<int>(json_uint(j, "mu", 1u << 16));
  o.attempt = static_cast<int>(json_uint(j, "attempt", 1u << 20));
  if (o.mu < 1 || o.attempt < 1) throw CheckFailure{"origin", "mu and attempt must be positive"};
  return o;
}

}  // namespace

SplittingCertificate certify(const CoverSpec& cover, std::uint64_t seed, Origin origin) {
  const ReducedBranchDivisor dbc = assemble_dbc(cover);
  const SplitResult split = splitting_number(cover, dbc);
  const auto levels = interpolation_levels(cover, dbc);
  const LevelEvidence& top = levels.back();
  if (top.k != split.lambda)
    throw Error(Errc::Internal, "least interpolation level " + std::to_string(top.k) +
                                    " differs from the class order " + std::to_string(split.lambda));

  std::map<int, RankEvidence> below;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) below.emplace(levels[i].k, levels[i].rank);
  return SplittingCertificate{cover,
                              dbc.intersection,
                              split.class_point,
                              split.lambda,
                              split.nu,
                              cover.m / top.k,
                              *top.witness,
                              top.rank,
                              std::move(below),
                              seed,
                              origin};
}

Json certificate_to_json(const SplittingCertificate& cert) {
  Json intersection = Json::array();
  for (const auto& [p, k] : cert.intersection.entries)
    intersection.push_back({{"point", point_to_json(p)}, {"multiplicity", k}});
  Json ranks = Json::object();
  for (const auto& [k, r] : cert.nonexistence_ranks) ranks[std::to_string(k)] = rank_to_json(r);

  return Json{
      {"cover",
       {{"curve", curve_to_json(cert.cover.cubic)},
        {"branch_form", form_to_json(cert.cover.branch_form)},
        {"b", cert.cover.b},
        {"m", cert.cover.m},
        {"n", cert.cover.n}}},
      {"intersection", intersection},
      {"class_point", point_to_json(cert.class_point)},
      {"lambda", cert.lambda},
      {"splitting_number", cert.splitting_number},
      {"oracle_splitting_number", cert.oracle_splitting_number},
      {"witness_form", form_to_json(cert.witness_form)},
      {"witness_level", cert.lambda},
      {"witness_rank", rank_to_json(cert.witness_rank)},
      {"nonexistence_ranks", ranks},
      {"seed", cert.seed},
      {"origin", origin_to_json(cert.origin)},
      {"field", kFieldLabel},
      {"hypotheses", cert.within_hypotheses() ? kWithin : kOutside},
      {"criterion", kCriterionLabel},
  };
}

std::string serialize_certificate(const SplittingCertificate& cert) {
  return canonical_dump(certificate_to_json(cert));
}

void emit_certificate(const SplittingCertificate& cert, const std::filesystem::path& path) {
  if (static_cast<long long>(cert.lambda) * cert.splitting_number != cert.cover.m)
    throw Error(Errc::VerificationFailed, "refusing to emit: lambda * nu != m", "lambda");
  if (cert.witness_form.degree() != cert.lambda * cert.cover.n)
    throw Error(Errc::VerificationFailed, "refusing to emit: witness degree is not lambda * n", "witness");
  const std::string text = serialize_certificate(cert) + "\n";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot open " + path.string() + ": " + std::strerror(errno), path.string());
  out << text;
  out.close();
  if (!out) throw Error(Errc::Io, "cannot write " + path.string() + ": " + std::strerror(errno), path.string());
}

VerifyOutcome verify_certificate(const Json& doc) {
  std::string stage = "format";
  try {
    require_keys(doc,
                 {"cover", "intersection", "class_point", "lambda", "splitting_number", "oracle_splitting_number",
                  "witness_form", "witness_level", "witness_rank", "nonexistence_ranks", "seed", "origin", "field",
                  "hypotheses", "criterion"},
                 stage);

    stage = "cover";
    const Json& c = doc.at("cover");
    require_keys(c, {"curve", "branch_form", "b", "m", "n"}, stage);
    const WeierstrassCurve curve = curve_from_json(c.at("curve"));
    const HomogeneousForm branch = form_from_json(c.at("branch_form"));
    if (!(branch.field() == curve.field())) throw CheckFailure{stage, "branch form and cubic use different fields"};
    const CoverSpec cover = CoverSpec::make(branch, curve, static_cast<int>(json_uint(c, "m", 1u << 16)));

    stage = "origin";
    const Origin origin = origin_from_json(doc.at("origin"));
    const std::uint64_t seed = json_uint(doc, "seed");
    if (!origin.constructed && seed != 0) throw CheckFailure{stage, "input certificates carry seed 0"};

    stage = "cover";
    const SplittingCertificate cert = certify(cover, seed, origin);
    const Json expected = certificate_to_json(cert);
    require_same(c, expected.at("cover"), stage, "cover");

    stage = "intersection";
    require_same(doc.at("intersection"), expected.at("intersection"), stage, "intersection divisor");
    stage = "class_point";
    require_same(doc.at("class_point"), expected.at("class_point"), stage, "class point");
    stage = "lambda";
    require_same(doc.at("lambda"), expected.at("lambda"), stage, "lambda");
    stage = "splitting_number";
    require_same(doc.at("splitting_number"), expected.at("splitting_number"), stage, "splitting number");
    if (cert.lambda * cert.splitting_number != cover.m) throw CheckFailure{"lambda", "lambda * nu != m"};

    stage = "witness";
    require_same(doc.at("witness_level"), expected.at("witness_level"), stage, "witness level");
    const HomogeneousForm witness = form_from_json(doc.at("witness_form"));
    if (!verify_witness(witness, assemble_dbc(cover), cert.lambda, curve))
      throw CheckFailure{stage, "witness form does not cut out lambda D exactly"};
    require_same(doc.at("witness_form"), expected.at("witness_form"), stage, "witness form");
    require_same(doc.at("witness_rank"), expected.at("witness_rank"), stage, "witness rank evidence");

    stage = "nonexistence_ranks";
    require_same(doc.at("nonexistence_ranks"), expected.at("nonexistence_ranks"), stage, "rank evidence");
    for (const auto& [k, r] : cert.nonexistence_ranks)
      if (r.kernel_dim() != r.multiples_dim)
        throw CheckFailure{stage, "level " + std::to_string(k) + " has forms beyond multiples of the cubic"};

    stage = "oracle";
    require_same(doc.at("oracle_splitting_number"), expected.at("oracle_splitting_number"), stage,
                 "oracle splitting number");

    stage = "origin";
    require_same(doc.at("origin"), expected.at("origin"), stage, "origin");
    if (origin.constructed) {
      if (origin.mu != cert.lambda) throw CheckFailure{stage, "requested order differs from lambda"};
      const ConstructionRequest req{cover.b, cover.m, origin.mu, curve, seed, origin.attempt};
      const ConstructedInstance inst = construct_curve(req);
      if (inst.attempt != origin.attempt || !(inst.form == branch))
        throw CheckFailure{stage, "replaying the construction does not reproduce the branch form"};
    }

    stage = "labels";
    require_same(doc.at("field"), expected.at("field"), stage, "field label");
    require_same(doc.at("hypotheses"), expected.at("hypotheses"), stage, "hypotheses label");
    require_same(doc.at("criterion"), expected.at("criterion"), stage, "criterion label");
  } catch (const CheckFailure& f) {
    return {false, f.check, f.message};
  } catch (const Error& e) {
    return {false, stage, std::string(errc_name(e.code())) + ": " + e.what()};
  } catch (const Json::exception& e) {
    return {false, stage, e.what()};
  }
  return {true, {}, "certificate verified"};
}

VerifyOutcome verify_certificate_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    return {false, "format", e.what()};
  }
  return verify_certificate(doc);
}

}  // namespace cycsplit
