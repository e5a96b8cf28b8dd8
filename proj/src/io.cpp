// SPDX-License-Identifier: Apache-2.0

#include "cycsplit/io.hpp"

#include <string>

namespace cycsplit {

namespace {

std::uint64_t as_uint(const Json& v, const std::string& what, std::uint64_t max) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw Error(Errc::InvalidInput, what + " must be a non-negative integer");
  const auto u = v.get<std::uint64_t>();
  if (u > max) throw Error(Errc::InvalidInput, what + " is out of range");
  return u;
}

}  // namespace

std::uint64_t json_uint(const Json& j, const char* key, std::uint64_t max) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidInput, std::string("missing field \"") + key + "\"");
  return as_uint(j.at(key), std::string("field \"") + key + "\"", max);
}

Json form_to_json(const HomogeneousForm& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({m.x, m.y, m.z, c});
  return Json{{"p", f.field().modulus()}, {"degree", f.degree()}, {"terms", terms}};
}

HomogeneousForm form_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "form record must be an object");
  const PrimeField field(static_cast<std::uint32_t>(json_uint(j, "p", PrimeField::kMaxModulus)));
  const int degree = static_cast<int>(json_uint(j, "degree", 1000));
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw Error(Errc::InvalidInput, "form record needs a \"terms\" array");
  HomogeneousForm f(field, degree);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 4) throw Error(Errc::InvalidInput, "each term is [i, j, k, c]");
    const Monomial m{static_cast<int>(as_uint(t[0], "exponent", 1000)),
                     static_cast<int>(as_uint(t[1], "exponent", 1000)),
                     static_cast<int>(as_uint(t[2], "exponent", 1000))};
    const auto c = as_uint(t[3], "coefficient", field.modulus() - 1);
    if (m.degree() != degree) throw Error(Errc::InvalidInput, "term exponents must sum to the degree");
    if (f.coefficient(m) != 0) throw Error(Errc::InvalidInput, "duplicate term");
    f.set(m, static_cast<std::int64_t>(c));
  }
  return f;
}

Json curve_to_json(const WeierstrassCurve& e) {
  return Json{{"p", e.field().modulus()}, {"a4", e.a4()}, {"a6", e.a6()}};
}

WeierstrassCurve curve_from_json(const Json& j) {
  const PrimeField field(static_cast<std::uint32_t>(json_uint(j, "p", PrimeField::kMaxModulus)));
  return WeierstrassCurve(field, static_cast<std::uint32_t>(json_uint(j, "a4", field.modulus() - 1)),
                          static_cast<std::uint32_t>(json_uint(j, "a6", field.modulus() - 1)));
}

Json point_to_json(const EPoint& p) {
  if (p.is_infinity()) return "inf";
  return Json::array({p.x(), p.y()});
}

EPoint point_from_json(const Json& j, const WeierstrassCurve& e) {
  if (j.is_string() && j.get<std::string>() == "inf") return EPoint::infinity();
  if (!j.is_array() || j.size() != 2) throw Error(Errc::InvalidInput, "point must be \"inf\" or [x, y]");
  const auto p = e.field().modulus() - 1;
  const EPoint q = EPoint::affine(static_cast<std::uint32_t>(as_uint(j[0], "x", p)),
                                  static_cast<std::uint32_t>(as_uint(j[1], "y", p)));
  if (!e.contains(q)) throw Error(Errc::NotOnCurve, "point is not on the curve");
  return q;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace cycsplit
