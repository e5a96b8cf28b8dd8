// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/cycsplit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

#include "cycsplit/construct.hpp"

using namespace cycsplit;

struct cycsplit_curve {
  WeierstrassCurve curve;
};
struct cycsplit_form {
  HomogeneousForm form;
};
struct cycsplit_certificate {
  SplittingCertificate cert;
};
struct cycsplit_kplet {
  std::vector<KpletMember> members;
};

static_assert(static_cast<int>(Errc::Internal) + 1 == CYCSPLIT_INTERNAL, "status codes mirror Errc");

namespace {

thread_local std::string g_message;
thread_local std::string g_detail;
thread_local cycsplit_status g_status = CYCSPLIT_OK;

cycsplit_status fail(cycsplit_status s, std::string message, std::string detail = {}) {
  g_status = s;
  g_message = std::move(message);
  g_detail = std::move(detail);
  return s;
}

cycsplit_status to_status(Errc c) { return static_cast<cycsplit_status>(static_cast<int>(c) + 1); }

// Runs `body`, translating exceptions into status codes.
template <class F>
cycsplit_status guarded(F&& body) {
  try {
    body();
    return CYCSPLIT_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what(), e.detail());
  } catch (const Json::exception& e) {
    return fail(CYCSPLIT_INVALID_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CYCSPLIT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CYCSPLIT_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(Errc::InvalidInput, what);
}

void fill(cycsplit_split_result* out, int nu, int lambda, const EPoint& p) {
  out->nu = nu;
  out->lambda = lambda;
  out->class_point_is_infinity = p.is_infinity() ? 1 : 0;
  out->class_x = p.x();
  out->class_y = p.y();
}

}  // namespace

extern "C" {

const char* cycsplit_status_name(cycsplit_status status) {
  if (status == CYCSPLIT_OK) return "Ok";
  if (status < CYCSPLIT_OK || status > CYCSPLIT_INTERNAL) return "Unknown";
  return errc_name(static_cast<Errc>(status - 1)).data();
}

int cycsplit_status_exit_code(cycsplit_status status) {
  switch (status) {
    case CYCSPLIT_OK:
      return 0;
    case CYCSPLIT_INVALID_INPUT:
    case CYCSPLIT_INVALID_FIELD:
    case CYCSPLIT_FIELD_MISMATCH:
    case CYCSPLIT_NOT_ON_CURVE:
    case CYCSPLIT_SINGULAR_CURVE:
    case CYCSPLIT_INVALID_COVER:
    case CYCSPLIT_IO:
      return 2;
    case CYCSPLIT_RETRY_EXHAUSTED:
      return 4;
    default:
      return 3;
  }
}

const char* cycsplit_last_error_message(void) { return g_message.c_str(); }
const char* cycsplit_last_error_detail(void) { return g_detail.c_str(); }

char* cycsplit_last_error_json(void) {
  try {
    const Json j{{"error", cycsplit_status_name(g_status)}, {"message", g_message}, {"detail", g_detail}};
    return dup_string(j.dump());
  } catch (...) {
    return nullptr;
  }
}

void cycsplit_string_free(char* s) { std::free(s); }

const char* cycsplit_version(void) { return "1.0.0"; }

cycsplit_status cycsplit_curve_create(uint32_t p, uint32_t a4, uint32_t a6, cycsplit_curve** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const PrimeField f(p);
    if (a4 >= p || a6 >= p) throw Error(Errc::InvalidInput, "curve coefficients must lie in [0, p)");
    *out = new cycsplit_curve{WeierstrassCurve(f, a4, a6)};
  });
}

cycsplit_status cycsplit_curve_find(int b, int m, uint32_t min_p, cycsplit_curve** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new cycsplit_curve{find_curve_for(b, m, min_p)};
  });
}

cycsplit_status cycsplit_curve_describe(const cycsplit_curve* curve, char** json_out) {
  return guarded([&] {
    require(curve && json_out, "null argument");
    Json j = curve_to_json(curve->curve);
    j["group_order"] = group_order(curve->curve);
    j["discriminant"] = curve->curve.discriminant();
    *json_out = dup_string(canonical_dump(j));
  });
}

void cycsplit_curve_destroy(cycsplit_curve* curve) { delete curve; }

cycsplit_status cycsplit_form_parse(const char* json, cycsplit_form** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new cycsplit_form{form_from_json(Json::parse(json))};
  });
}

cycsplit_status cycsplit_form_to_json(const cycsplit_form* form, char** json_out) {
  return guarded([&] {
    require(form && json_out, "null argument");
    *json_out = dup_string(canonical_dump(form_to_json(form->form)));
  });
}

void cycsplit_form_destroy(cycsplit_form* form) { delete form; }

cycsplit_status cycsplit_split(const cycsplit_curve* curve, const cycsplit_form* branch, int m,
                               cycsplit_split_result* out) {
  return guarded([&] {
    require(curve && branch && out, "null argument");
    const auto r = splitting_number(CoverSpec::make(branch->form, curve->curve, m));
    fill(out, r.nu, r.lambda, r.class_point);
  });
}

cycsplit_status cycsplit_split_oracle(const cycsplit_curve* curve, const cycsplit_form* branch, int m, int* nu_out) {
  return guarded([&] {
    require(curve && branch && nu_out, "null argument");
    *nu_out = splitting_number_oracle(CoverSpec::make(branch->form, curve->curve, m));
  });
}

cycsplit_status cycsplit_certify(const cycsplit_curve* curve, const cycsplit_form* branch, int m,
                                 cycsplit_certificate** out) {
  return guarded([&] {
    require(curve && branch && out, "null argument");
    *out = new cycsplit_certificate{certify(CoverSpec::make(branch->form, curve->curve, m))};
  });
}

cycsplit_status cycsplit_certificate_summary(const cycsplit_certificate* cert, cycsplit_split_result* out) {
  return guarded([&] {
    require(cert && out, "null argument");
    fill(out, cert->cert.splitting_number, cert->cert.lambda, cert->cert.class_point);
  });
}

cycsplit_status cycsplit_certificate_to_json(const cycsplit_certificate* cert, char** json_out) {
  return guarded([&] {
    require(cert && json_out, "null argument");
    *json_out = dup_string(serialize_certificate(cert->cert));
  });
}

cycsplit_status cycsplit_certificate_write(const cycsplit_certificate* cert, const char* path) {
  return guarded([&] {
    require(cert && path, "null argument");
    emit_certificate(cert->cert, path);
  });
}

void cycsplit_certificate_destroy(cycsplit_certificate* cert) { delete cert; }

cycsplit_status cycsplit_certificate_verify_json(const char* json) {
  return guarded([&] {
    require(json != nullptr, "null argument");
    const auto outcome = verify_certificate_text(json);
    if (!outcome.ok)
      throw Error(Errc::VerificationFailed, "check \"" + outcome.failed_check + "\" failed: " + outcome.message,
                  outcome.failed_check);
  });
}

cycsplit_status cycsplit_construct(const cycsplit_curve* curve, const cycsplit_construct_params* params,
                                   cycsplit_form** form_out, char** report_out, cycsplit_certificate** cert_out) {
  return guarded([&] {
    require(curve && params && form_out && report_out, "null argument");
    const ConstructionRequest req{params->b, params->m, params->mu, curve->curve, params->seed,
                                  params->retry_budget};
    ConstructedInstance inst = construct_curve(req);
    Json points = Json::array();
    for (const auto& p : inst.points) points.push_back(point_to_json(p));
    const Json report{{"points", points}, {"attempt", inst.attempt}, {"report", inst.report.to_json()}};

    std::unique_ptr<cycsplit_certificate> cert;
    if (cert_out)
      cert.reset(new cycsplit_certificate{certify(CoverSpec::make(inst.form, curve->curve, params->m), params->seed,
                                                  Origin{true, params->mu, inst.attempt})});
    std::unique_ptr<cycsplit_form> form(new cycsplit_form{inst.form});
    char* text = dup_string(canonical_dump(report));
    *form_out = form.release();
    *report_out = text;
    if (cert_out) *cert_out = cert.release();
  });
}

cycsplit_status cycsplit_type_report(const cycsplit_curve* curve, const cycsplit_form* branch, int b, int m,
                                     char** json_out) {
  return guarded([&] {
    require(curve && branch && json_out, "null argument");
    if (!(branch->form.field() == curve->curve.field()))
      throw Error(Errc::FieldMismatch, "branch form and cubic use different fields");
    *json_out = dup_string(canonical_dump(verify_type_bm(branch->form, curve->curve, b, m).to_json()));
  });
}

cycsplit_status cycsplit_kplet_build(const cycsplit_curve* curve, int b, int m, uint64_t seed, int retry_budget,
                                     cycsplit_kplet** out) {
  return guarded([&] {
    require(curve && out, "null argument");
    *out = new cycsplit_kplet{build_kplet(b, m, curve->curve, seed, retry_budget)};
  });
}

size_t cycsplit_kplet_size(const cycsplit_kplet* kplet) { return kplet ? kplet->members.size() : 0; }

cycsplit_status cycsplit_kplet_member(const cycsplit_kplet* kplet, size_t i, int* mu_out, cycsplit_form** form_out,
                                      cycsplit_certificate** cert_out) {
  return guarded([&] {
    require(kplet != nullptr, "null argument");
    if (i >= kplet->members.size()) throw Error(Errc::InvalidInput, "member index out of range");
    const auto& member = kplet->members[i];
    std::unique_ptr<cycsplit_form> form(form_out ? new cycsplit_form{member.instance.form} : nullptr);
    std::unique_ptr<cycsplit_certificate> cert(cert_out ? new cycsplit_certificate{member.certificate} : nullptr);
    if (mu_out) *mu_out = member.mu;
    if (form_out) *form_out = form.release();
    if (cert_out) *cert_out = cert.release();
  });
}

void cycsplit_kplet_destroy(cycsplit_kplet* kplet) { delete kplet; }

}  // extern "C"
