// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cycsplit/construct.hpp"
#include "tamper.hpp"

using namespace cycsplit;

namespace {

SplittingCertificate input_certificate() {
  // (X - 3Z) Z on y^2 = x^3 + 1 over F_7, m = 2: D = (3,0) + 2 O, lambda 2
  const PrimeField f(7);
  const WeierstrassCurve e(f, 0, 1);
  HomogeneousForm b(f, 2);
  b.set({1, 0, 1}, 1);
  b.set({0, 0, 2}, -3);
  return certify(CoverSpec::make(b, e, 2));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "cycsplit_cert_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("certificates for a hand-built cover") {
  const auto cert = input_certificate();
  CHECK(cert.lambda == 2);
  CHECK(cert.splitting_number == 1);
  CHECK(cert.oracle_splitting_number == 1);
  CHECK(cert.witness_form.degree() == 2);
  CHECK(cert.nonexistence_ranks.size() == 1);
  CHECK(cert.nonexistence_ranks.at(1).kernel_dim() == cert.nonexistence_ranks.at(1).multiples_dim);
  CHECK_FALSE(cert.within_hypotheses());
  const auto json = certificate_to_json(cert);
  CHECK(json.at("hypotheses") == "outside theorem hypotheses");
  CHECK(json.at("criterion") == "interpolation criterion");
  CHECK(json.at("origin").at("kind") == "input");
  CHECK(verify_certificate(json).ok);
}

TEST_CASE("emit then verify, and identical bytes on re-emission") {
  const WeierstrassCurve e = find_curve_for(4, 4);
  const auto k = build_kplet(4, 4, e, 3);
  for (const auto& mbr : k) {
    const auto a = scratch("a.json"), b = scratch("b.json");
    emit_certificate(mbr.certificate, a);
    emit_certificate(build_kplet(4, 4, e, 3)[static_cast<std::size_t>(&mbr - k.data())].certificate, b);
    CHECK(slurp(a) == slurp(b));
    const auto outcome = verify_certificate_text(slurp(a));
    CHECK_MESSAGE(outcome.ok, outcome.failed_check << ": " << outcome.message);
    CHECK(slurp(a).find('\n') == slurp(a).size() - 1);
  }
}

TEST_CASE("emission refuses broken invariants") {
  auto cert = input_certificate();
  cert.splitting_number = 2;
  try {
    emit_certificate(cert, scratch("bad.json"));
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::VerificationFailed);
  }
  auto cert2 = input_certificate();
  cert2.witness_form = HomogeneousForm(cert2.witness_form.field(), 3);
  CHECK_THROWS_AS(emit_certificate(cert2, scratch("bad2.json")), Error);
  try {
    emit_certificate(input_certificate(), "/nonexistent-dir/x/cert.json");
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::Io);
  }
}

TEST_CASE("every single-field perturbation is rejected") {
  std::vector<SplittingCertificate> certs{input_certificate()};
  for (auto& mbr : build_kplet(4, 4, find_curve_for(4, 4), 8)) certs.push_back(mbr.certificate);
  for (const auto& cert : certs) {
    const auto doc = certificate_to_json(cert);
    REQUIRE(verify_certificate(doc).ok);
    const auto copies = testing::tampered_copies(doc);
    CHECK(copies.size() > 20);
    for (const auto& [ptr, bad] : copies) {
      const auto outcome = verify_certificate(bad);
      CHECK_MESSAGE(!outcome.ok, "tampering " << ptr << " went unnoticed");
    }
  }
}

TEST_CASE("structural tampering is rejected") {
  const auto doc = certificate_to_json(input_certificate());
  auto extra = doc;
  extra["note"] = "hi";
  CHECK(verify_certificate(extra).failed_check == "format");
  auto missing = doc;
  missing.erase("seed");
  CHECK(verify_certificate(missing).failed_check == "format");
  auto typed = doc;
  typed["lambda"] = "2";
  CHECK_FALSE(verify_certificate(typed).ok);
  CHECK(verify_certificate_text("{not json").failed_check == "format");
}

TEST_CASE("tampered witness is reported under its check name") {
  const auto k = build_kplet(4, 4, find_curve_for(4, 4), 1);
  auto doc = certificate_to_json(k[1].certificate);
  auto& terms = doc["witness_form"]["terms"];
  terms[terms.size() - 1][3] = (terms[terms.size() - 1][3].get<int>() + 1) % 5;
  const auto outcome = verify_certificate(doc);
  CHECK_FALSE(outcome.ok);
  CHECK(outcome.failed_check == "witness");
}
