// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library through cycsplit.h only.
#include <doctest.h>

#include <cstring>
#include <string>

#include <cycsplit/cycsplit.h>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cycsplit_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and exit codes") {
  CHECK(std::string(cycsplit_status_name(CYCSPLIT_OK)) == "Ok");
  CHECK(std::string(cycsplit_status_name(CYCSPLIT_ESSENTIALLY_RAMIFIED)) == "EssentiallyRamified");
  CHECK(std::string(cycsplit_status_name(CYCSPLIT_INTERNAL)) == "Internal");
  CHECK(cycsplit_status_exit_code(CYCSPLIT_OK) == 0);
  CHECK(cycsplit_status_exit_code(CYCSPLIT_INVALID_INPUT) == 2);
  CHECK(cycsplit_status_exit_code(CYCSPLIT_ESSENTIALLY_RAMIFIED) == 3);
  CHECK(cycsplit_status_exit_code(CYCSPLIT_VERIFICATION_FAILED) == 3);
  CHECK(cycsplit_status_exit_code(CYCSPLIT_RETRY_EXHAUSTED) == 4);
}

TEST_CASE("curve creation errors set the last error") {
  cycsplit_curve* c = nullptr;
  CHECK(cycsplit_curve_create(9, 1, 1, &c) == CYCSPLIT_INVALID_FIELD);
  CHECK(c == nullptr);
  CHECK(std::strlen(cycsplit_last_error_message()) > 0);
  CHECK(cycsplit_curve_create(7, 0, 0, &c) == CYCSPLIT_SINGULAR_CURVE);
  CHECK(cycsplit_curve_create(7, 9, 1, &c) == CYCSPLIT_INVALID_INPUT);
  const std::string err = take(cycsplit_last_error_json());
  CHECK(err.find("\"error\":\"InvalidInput\"") != std::string::npos);
  CHECK(cycsplit_curve_create(7, 0, 1, nullptr) == CYCSPLIT_INVALID_INPUT);
}

TEST_CASE("split, oracle and certificate through handles") {
  cycsplit_curve* c = nullptr;
  REQUIRE(cycsplit_curve_create(7, 0, 1, &c) == CYCSPLIT_OK);
  const std::string desc = take([&] {
    char* s = nullptr;
    cycsplit_curve_describe(c, &s);
    return s;
  }());
  CHECK(desc.find("\"group_order\":12") != std::string::npos);

  cycsplit_form* b = nullptr;
  // (X - 3Z) Z
  REQUIRE(cycsplit_form_parse(R"({"p":7,"degree":2,"terms":[[1,0,1,1],[0,0,2,4]]})", &b) == CYCSPLIT_OK);
  cycsplit_split_result r{};
  REQUIRE(cycsplit_split(c, b, 2, &r) == CYCSPLIT_OK);
  CHECK(r.lambda == 2);
  CHECK(r.nu == 1);
  CHECK(r.class_point_is_infinity == 0);
  CHECK(r.class_x == 3);
  CHECK(r.class_y == 0);
  int nu = 0;
  REQUIRE(cycsplit_split_oracle(c, b, 2, &nu) == CYCSPLIT_OK);
  CHECK(nu == 1);

  cycsplit_certificate* cert = nullptr;
  REQUIRE(cycsplit_certify(c, b, 2, &cert) == CYCSPLIT_OK);
  char* text = nullptr;
  REQUIRE(cycsplit_certificate_to_json(cert, &text) == CYCSPLIT_OK);
  std::string json = take(text);
  CHECK(cycsplit_certificate_verify_json(json.c_str()) == CYCSPLIT_OK);
  json.replace(json.find("\"lambda\":2"), 10, "\"lambda\":1");
  CHECK(cycsplit_certificate_verify_json(json.c_str()) == CYCSPLIT_VERIFICATION_FAILED);
  CHECK(std::string(cycsplit_last_error_detail()) == "lambda");

  cycsplit_certificate_destroy(cert);
  cycsplit_form_destroy(b);
  cycsplit_curve_destroy(c);
}

TEST_CASE("essentially ramified input") {
  cycsplit_curve* c = nullptr;
  REQUIRE(cycsplit_curve_create(7, 0, 1, &c) == CYCSPLIT_OK);
  cycsplit_form* b = nullptr;
  // Y Z
  REQUIRE(cycsplit_form_parse(R"({"p":7,"degree":2,"terms":[[0,1,1,1]]})", &b) == CYCSPLIT_OK);
  cycsplit_split_result r{};
  CHECK(cycsplit_split(c, b, 2, &r) == CYCSPLIT_ESSENTIALLY_RAMIFIED);
  CHECK(cycsplit_form_parse(R"({"p":7,"degree":2,"terms":[[0,1,0,1]]})", &b) == CYCSPLIT_INVALID_INPUT);
  CHECK(cycsplit_form_parse("not json", &b) == CYCSPLIT_INVALID_INPUT);
  cycsplit_form_destroy(b);
  cycsplit_curve_destroy(c);
}

TEST_CASE("construction and k-plets through handles") {
  cycsplit_curve* c = nullptr;
  REQUIRE(cycsplit_curve_find(4, 4, 5, &c) == CYCSPLIT_OK);
  cycsplit_construct_params params{4, 4, 2, 9, 64};
  cycsplit_form* form = nullptr;
  char* report = nullptr;
  cycsplit_certificate* cert = nullptr;
  REQUIRE(cycsplit_construct(c, &params, &form, &report, &cert) == CYCSPLIT_OK);
  const std::string rep = take(report);
  CHECK(rep.find("\"pass\":true") != std::string::npos);
  cycsplit_split_result r{};
  REQUIRE(cycsplit_certificate_summary(cert, &r) == CYCSPLIT_OK);
  CHECK(r.lambda == 2);
  char* typed = nullptr;
  REQUIRE(cycsplit_type_report(c, form, 4, 4, &typed) == CYCSPLIT_OK);
  CHECK(take(typed).find("\"pass\":true") != std::string::npos);
  cycsplit_certificate_destroy(cert);
  cycsplit_form_destroy(form);

  cycsplit_kplet* k = nullptr;
  REQUIRE(cycsplit_kplet_build(c, 4, 4, 1, 64, &k) == CYCSPLIT_OK);
  REQUIRE(cycsplit_kplet_size(k) == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    int mu = 0;
    cycsplit_certificate* mc = nullptr;
    REQUIRE(cycsplit_kplet_member(k, i, &mu, nullptr, &mc) == CYCSPLIT_OK);
    REQUIRE(cycsplit_certificate_summary(mc, &r) == CYCSPLIT_OK);
    CHECK(r.lambda == mu);
    CHECK(r.lambda * r.nu == 4);
    cycsplit_certificate_destroy(mc);
  }
  CHECK(cycsplit_kplet_member(k, 3, nullptr, nullptr, nullptr) == CYCSPLIT_INVALID_INPUT);
  cycsplit_kplet_destroy(k);

  cycsplit_construct_params bad{4, 4, 3, 0, 64};
  CHECK(cycsplit_construct(c, &bad, &form, &report, nullptr) == CYCSPLIT_INVALID_INPUT);
  cycsplit_curve_destroy(c);
}
