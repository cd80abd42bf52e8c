#include "primecm/record.hpp"

#include <string>

namespace primecm::record {

namespace {

using nlohmann::json;

std::string str(const Integer& v) { return v.get_str(); }

Integer big(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw Error(ErrorCode::InvalidArgument, std::string("missing decimal field '") + key + "'");
  }
  Integer v;
  if (v.set_str(obj.at(key).get<std::string>(), 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' is not an integer");
  }
  return v;
}

template <typename T>
T count(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw Error(ErrorCode::InvalidArgument, std::string("missing count field '") + key + "'");
  }
  return obj.at(key).get<T>();
}

json curve_json(const ec::Curve& c) {
  return {{"p", str(c.p())}, {"A", str(c.a())}, {"B", str(c.b())}};
}

json point_json(const ec::Point& pt) {
  if (pt.is_infinity()) return "infinity";
  return {{"x", str(pt.xy->first)}, {"y", str(pt.xy->second)}};
}

ec::Curve curve_from(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "curve must be an object");
  return ec::Curve(big(j, "p"), big(j, "A"), big(j, "B"));
}

ec::Point point_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return ec::Point::infinity();
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "witness must be an object");
  return ec::Point::affine(big(j, "x"), big(j, "y"));
}

quadratic::Discriminant disc_from(const json& obj) {
  const Integer d = big(obj, "D");
  if (!d.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "discriminant out of range");
  return quadratic::Discriminant(d.get_si());
}

}  // namespace

json to_json(const construct::FixedOrderResult& r) {
  json basis = json::array();
  for (auto p : r.basis_primes) basis.push_back(p);
  return {
      {"type", "fixed-order"},
      {"N", str(r.n)},
      {"p", str(r.p)},
      {"D", std::to_string(r.d.value())},
      {"x", str(r.x)},
      {"y", str(r.y)},
      {"sign", r.sign > 0 ? "+" : "-"},
      {"rounds_used", r.rounds_used},
      {"basis_primes", basis},
      {"class_number", r.class_number},
      {"invariant", classpoly::to_string(r.invariant)},
      {"class_poly_digits", r.class_poly_digits},
      {"j", str(r.j_invariant)},
      {"curve", curve_json(r.curve)},
      {"witness", point_json(r.certificate.witness)},
  };
}

json to_json(const construct::FixedSizeResult& r) {
  return {
      {"type", "fixed-size"},
      {"k", r.k},
      {"D", std::to_string(r.d.value())},
      {"p", str(r.p)},
      {"q", str(r.q)},
      {"x", str(r.x)},
      {"y", str(r.y)},
      {"unit_index", r.unit_index},
      {"primes_scanned", r.primes_scanned},
      {"curve", curve_json(r.curve)},
      {"witness", point_json(r.certificate.witness)},
  };
}

json to_json(const Result& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

Result from_json(const json& in) {
  if (!in.is_object()) throw Error(ErrorCode::InvalidArgument, "result must be a JSON object");
  const json& j = in.contains("result") ? in.at("result") : in;
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw Error(ErrorCode::InvalidArgument, "result object has no type");
  }
  const auto type = j.at("type").get<std::string>();
  if (!j.contains("curve") || !j.contains("witness")) {
    throw Error(ErrorCode::InvalidArgument, "result object lacks curve or witness");
  }
  const ec::Curve curve = curve_from(j.at("curve"));
  const ec::Point witness = point_from(j.at("witness"));

  if (type == "fixed-order") {
    construct::FixedOrderResult r;
    r.n = big(j, "N");
    r.p = big(j, "p");
    r.d = disc_from(j);
    r.x = big(j, "x");
    r.y = big(j, "y");
    const auto sign = j.value("sign", std::string("+"));
    if (sign != "+" && sign != "-") throw Error(ErrorCode::InvalidArgument, "sign must be + or -");
    r.sign = sign == "+" ? 1 : -1;
    r.rounds_used = count<unsigned>(j, "rounds_used");
    if (j.contains("basis_primes")) {
      for (const auto& p : j.at("basis_primes")) r.basis_primes.push_back(p.get<std::uint32_t>());
    }
    r.class_number = count<std::size_t>(j, "class_number");
    r.invariant = classpoly::invariant_kind_from_string(j.value("invariant", std::string("j")));
    r.class_poly_digits = j.value("class_poly_digits", std::size_t{0});
    if (j.contains("j")) r.j_invariant = big(j, "j");
    r.curve = curve;
    r.certificate = ec::OrderCertificate{curve, r.n, witness};
    return r;
  }
  if (type == "fixed-size") {
    construct::FixedSizeResult r;
    r.k = count<unsigned>(j, "k");
    r.d = disc_from(j);
    r.p = big(j, "p");
    r.q = big(j, "q");
    r.x = big(j, "x");
    r.y = big(j, "y");
    r.unit_index = count<unsigned>(j, "unit_index");
    r.primes_scanned = j.value("primes_scanned", 0u);
    r.curve = curve;
    r.certificate = ec::OrderCertificate{curve, r.q, witness};
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown result type: " + type);
}

construct::CheckReport check(const Result& r) {
  return std::visit([](const auto& v) { return construct::check_certificate(v); }, r);
}

}  // namespace primecm::record
