// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Uses only the C interface in cycsplit.h.
// Results go to stdout as one JSON document; failures go to stderr as
// {"error", "message", "detail", "command"} with exit status 2 (validation),
// 3 (mathematical) or 4 (retry budget exhausted).

#include <cycsplit/cycsplit.h>

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

struct UsageError {
  std::string message;
  std::string detail;
};

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using CurvePtr = std::unique_ptr<cycsplit_curve, Deleter<cycsplit_curve, cycsplit_curve_destroy>>;
using FormPtr = std::unique_ptr<cycsplit_form, Deleter<cycsplit_form, cycsplit_form_destroy>>;
using CertPtr = std::unique_ptr<cycsplit_certificate, Deleter<cycsplit_certificate, cycsplit_certificate_destroy>>;
using KpletPtr = std::unique_ptr<cycsplit_kplet, Deleter<cycsplit_kplet, cycsplit_kplet_destroy>>;

// Thrown after a failing library call; the library's last-error slot has the details.
struct LibraryFailure {
  cycsplit_status status;
};

void check(cycsplit_status s) {
  if (s != CYCSPLIT_OK) throw LibraryFailure{s};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cycsplit_string_free(s);
  return out;
}

// Digits only, no sign, no whitespace, no leading zeros beyond "0".
std::uint64_t parse_decimal(const std::string& text, const std::string& flag, std::uint64_t max) {
  if (text.empty() || text.size() > 20 || (text.size() > 1 && text[0] == '0'))
    throw UsageError{flag + " expects a decimal integer, got \"" + text + "\"", flag};
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw UsageError{flag + " expects a decimal integer, got \"" + text + "\"", flag};
    const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (max - d) / 10) throw UsageError{flag + " is out of range: " + text, flag};
    v = v * 10 + d;
  }
  return v;
}

struct CurveArg {
  std::uint32_t p, a4, a6;
};

CurveArg parse_curve(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3 || text.back() == ',') throw UsageError{"--curve expects p,a4,a6", "--curve"};
  return {static_cast<std::uint32_t>(parse_decimal(parts[0], "--curve p", 65535)),
          static_cast<std::uint32_t>(parse_decimal(parts[1], "--curve a4", 65535)),
          static_cast<std::uint32_t>(parse_decimal(parts[2], "--curve a6", 65535))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + path, path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CurvePtr make_curve(const CurveArg& c) {
  cycsplit_curve* out = nullptr;
  check(cycsplit_curve_create(c.p, c.a4, c.a6, &out));
  return CurvePtr(out);
}

CurvePtr find_curve(int b, int m) {
  cycsplit_curve* out = nullptr;
  check(cycsplit_curve_find(b, m, 5, &out));
  return CurvePtr(out);
}

FormPtr load_form(const std::string& path) {
  cycsplit_form* out = nullptr;
  check(cycsplit_form_parse(read_file(path).c_str(), &out));
  return FormPtr(out);
}

Json describe(const cycsplit_curve* c) {
  char* s = nullptr;
  check(cycsplit_curve_describe(c, &s));
  return Json::parse(take(s));
}

Json form_json(const cycsplit_form* f) {
  char* s = nullptr;
  check(cycsplit_form_to_json(f, &s));
  return Json::parse(take(s));
}

Json point_json(const cycsplit_split_result& r) {
  if (r.class_point_is_infinity) return "inf";
  return Json::array({r.class_x, r.class_y});
}

Json cert_summary(const cycsplit_certificate* cert) {
  cycsplit_split_result r{};
  check(cycsplit_certificate_summary(cert, &r));
  return Json{{"lambda", r.lambda}, {"nu", r.nu}, {"class_point", point_json(r)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Raw flag values; numeric flags are parsed strictly after CLI11 is done.
struct Flags {
  std::string curve, branch, m, b, mu, seed = "0", retries = "64", certify, file;
};

int as_int(const std::string& text, const std::string& flag, std::uint64_t max = 1u << 16) {
  return static_cast<int>(parse_decimal(text, flag, max));
}

void warn_outside_hypotheses(int b) {
  if (b == 3) std::cerr << "warning: b = 3 lies outside the theorem hypotheses (b >= 4); exploring anyway\n";
}

int run_split(const Flags& f, bool lambda_only) {
  const int m = as_int(f.m, "-m");
  CurvePtr curve = make_curve(parse_curve(f.curve));
  FormPtr branch = load_form(f.branch);
  cycsplit_split_result r{};
  check(cycsplit_split(curve.get(), branch.get(), m, &r));
  if (lambda_only) {
    emit(Json{{"lambda", r.lambda}});
    return 0;
  }
  Json out{{"nu", r.nu}, {"lambda", r.lambda}, {"class_point", point_json(r)}};
  if (!f.certify.empty()) {
    cycsplit_certificate* cert = nullptr;
    check(cycsplit_certify(curve.get(), branch.get(), m, &cert));
    CertPtr owned(cert);
    check(cycsplit_certificate_write(cert, f.certify.c_str()));
    out["certificate"] = f.certify;
  }
  emit(out);
  return 0;
}

int run_construct(const Flags& f) {
  cycsplit_construct_params params{as_int(f.b, "-b"), as_int(f.m, "-m"), as_int(f.mu, "--mu"),
                                   parse_decimal(f.seed, "--seed", UINT64_MAX), as_int(f.retries, "--retries")};
  warn_outside_hypotheses(params.b);
  CurvePtr curve = f.curve.empty() ? find_curve(params.b, params.m) : make_curve(parse_curve(f.curve));
  cycsplit_form* form = nullptr;
  char* report = nullptr;
  cycsplit_certificate* cert = nullptr;
  check(cycsplit_construct(curve.get(), &params, &form, &report, f.certify.empty() ? nullptr : &cert));
  FormPtr owned_form(form);
  CertPtr owned_cert(cert);
  Json out = Json::parse(take(report));
  out["curve"] = describe(curve.get());
  out["form"] = form_json(form);
  if (cert) {
    check(cycsplit_certificate_write(cert, f.certify.c_str()));
    out["certificate"] = f.certify;
  }
  emit(out);
  return 0;
}

int run_verify(const Flags& f) {
  check(cycsplit_certificate_verify_json(read_file(f.file).c_str()));
  emit(Json{{"ok", true}, {"file", f.file}});
  return 0;
}

// Builds, writes and re-verifies every member; returns the member summaries.
Json run_kplet_members(const cycsplit_curve* curve, int b, int m, std::uint64_t seed, int retries,
                       const std::string& prefix) {
  cycsplit_kplet* raw = nullptr;
  check(cycsplit_kplet_build(curve, b, m, seed, retries, &raw));
  KpletPtr kplet(raw);
  Json members = Json::array();
  for (std::size_t i = 0; i < cycsplit_kplet_size(raw); ++i) {
    int mu = 0;
    cycsplit_form* form = nullptr;
    cycsplit_certificate* cert = nullptr;
    check(cycsplit_kplet_member(raw, i, &mu, &form, &cert));
    FormPtr owned_form(form);
    CertPtr owned_cert(cert);
    char* text = nullptr;
    check(cycsplit_certificate_to_json(cert, &text));
    check(cycsplit_certificate_verify_json(take(text).c_str()));
    Json entry = cert_summary(cert);
    entry["mu"] = mu;
    entry["form"] = form_json(form);
    entry["verified"] = true;
    if (!prefix.empty()) {
      const std::string path = prefix + "-mu" + std::to_string(mu) + ".json";
      check(cycsplit_certificate_write(cert, path.c_str()));
      entry["certificate"] = path;
    }
    members.push_back(entry);
  }
  return members;
}

int run_kplet(const Flags& f) {
  const int b = as_int(f.b, "-b"), m = as_int(f.m, "-m");
  const auto seed = parse_decimal(f.seed, "--seed", UINT64_MAX);
  const int retries = as_int(f.retries, "--retries");
  warn_outside_hypotheses(b);
  CurvePtr curve = f.curve.empty() ? find_curve(b, m) : make_curve(parse_curve(f.curve));
  Json members = run_kplet_members(curve.get(), b, m, seed, retries, f.certify);
  emit(Json{{"b", b}, {"m", m}, {"seed", seed}, {"curve", describe(curve.get())}, {"k", members.size()},
            {"members", members}});
  return 0;
}

int run_demo(const Flags& f) {
  const auto seed = parse_decimal(f.seed, "--seed", UINT64_MAX);
  const int retries = as_int(f.retries, "--retries");
  CurvePtr curve = find_curve(4, 4);
  Json members = run_kplet_members(curve.get(), 4, 4, seed, retries, f.certify);
  std::vector<int> nus;
  for (const auto& mbr : members) nus.push_back(mbr["nu"].get<int>());
  emit(Json{{"demo", "type (4,4) k-plet: one curve per divisor of 4, distinguished by splitting number"},
            {"seed", seed},
            {"curve", describe(curve.get())},
            {"k", members.size()},
            {"splitting_numbers", nus},
            {"members", members}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting numbers of a cubic under cyclic covers, with certificates"};
  app.require_subcommand(1);
  Flags f;

  auto add_curve = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--curve", f.curve, "Weierstrass cubic as p,a4,a6");
    if (required) o->required();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "RNG seed (decimal)");
    sub->add_option("--retries", f.retries, "retry budget (decimal)");
  };

  auto* split = app.add_subcommand("split", "splitting number, lambda and class point of a branch curve");
  add_curve(split, true);
  split->add_option("--branch", f.branch, "branch form JSON file")->required();
  split->add_option("-m", f.m, "cover degree")->required();
  split->add_option("--certify", f.certify, "write a certificate to FILE");

  auto* lambda = app.add_subcommand("lambda", "lambda invariant of R = B + E");
  add_curve(lambda, true);
  lambda->add_option("--branch", f.branch, "branch form JSON file")->required();
  lambda->add_option("-m", f.m, "cover degree")->required();

  auto* construct = app.add_subcommand("construct", "build a type (b,m) branch curve with lambda = mu");
  add_curve(construct, false);
  construct->add_option("-b", f.b, "branch degree")->required();
  construct->add_option("-m", f.m, "cover degree")->required();
  construct->add_option("--mu", f.mu, "target class order")->required();
  add_seed(construct);
  construct->add_option("--certify", f.certify, "write a certificate to FILE");

  auto* verify = app.add_subcommand("verify", "re-check a certificate; exit 0 iff valid");
  verify->add_option("file", f.file, "certificate JSON")->required();

  auto* kplet = app.add_subcommand("kplet", "one certified curve per divisor of m");
  add_curve(kplet, false);
  kplet->add_option("-b", f.b, "branch degree")->required();
  kplet->add_option("-m", f.m, "cover degree")->required();
  add_seed(kplet);
  kplet->add_option("--certify", f.certify, "certificate path prefix; writes PREFIX-mu<mu>.json");

  auto* demo = app.add_subcommand("demo", "type (4,4) three-member demonstration");
  add_seed(demo);
  demo->add_option("--certify", f.certify, "certificate path prefix; writes PREFIX-mu<mu>.json");

  std::string command;
  auto report = [&](const std::string& error, const std::string& message, const std::string& detail) {
    std::cerr << Json{{"error", error}, {"message", message}, {"detail", detail}, {"command", command}}.dump()
              << "\n";
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("InvalidInput", e.what(), "arguments");
    return 2;
  }

  const std::vector<std::pair<CLI::App*, std::function<int()>>> dispatch{
      {split, [&] { return run_split(f, false); }}, {lambda, [&] { return run_split(f, true); }},
      {construct, [&] { return run_construct(f); }}, {verify, [&] { return run_verify(f); }},
      {kplet, [&] { return run_kplet(f); }},         {demo, [&] { return run_demo(f); }},
  };
  try {
    for (const auto& [sub, run] : dispatch) {
      if (!sub->parsed()) continue;
      command = sub->get_name();
      return run();
    }
  } catch (const UsageError& e) {
    report("InvalidInput", e.message, e.detail);
    return 2;
  } catch (const LibraryFailure& e) {
    report(cycsplit_status_name(e.status), cycsplit_last_error_message(), cycsplit_last_error_detail());
    return cycsplit_status_exit_code(e.status);
  } catch (const Json::exception& e) {
    report("Internal", e.what(), "output");
    return 3;
  }
  return 2;
}
