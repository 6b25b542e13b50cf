#include "chevorb/json_io.hpp"

#include <stdexcept>

namespace chevorb {

namespace {

std::string poly_hex(std::uint32_t poly) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (; poly != 0; poly >>= 4) out.insert(out.begin(), digits[poly & 0xf]);
  return out.empty() ? "0" : out;
}

Fel fel_in_field(const Field& field, const json& j) {
  if (!j.is_string()) throw std::invalid_argument("field elements are hex strings");
  const Fel a = fel_from_hex(j.get<std::string>());
  if (!field.contains(a)) throw std::invalid_argument("coefficient " + j.get<std::string>() + " is outside GF(2^" +
                                                      std::to_string(field.degree()) + ")");
  return a;
}

}  // namespace

json field_to_json(const Field& field) { return {{"k", field.degree()}, {"poly", poly_hex(field.poly())}}; }

const Field& field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer())
    throw std::invalid_argument("field must be an object with integer \"k\"");
  const Field& f = gf(j["k"].get<int>());
  if (j.contains("poly") && j["poly"].get<std::string>() != poly_hex(f.poly()))
    throw std::invalid_argument("field polynomial " + j["poly"].get<std::string>() +
                                " differs from the canonical " + poly_hex(f.poly()));
  return f;
}

json vec_to_json(const ChevVec& v) {
  json e = json::object();
  for (RootIndex b : v.support()) e[to_string(v.sys().root(b))] = to_hex(v.e(b));
  json h = json::array();
  for (Fel c : v.hpart()) h.push_back(to_hex(c));
  return {{"phi", std::string(to_string(v.sys().id()))}, {"field", field_to_json(v.field())}, {"e", e}, {"h", h}};
}

ChevVec vec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("phi") || !j.contains("field"))
    throw std::invalid_argument("vector JSON needs \"phi\" and \"field\"");
  const RootSystem& sys = root_system(parse_root_system_id(j["phi"].get<std::string>()));
  const Field& field = field_from_json(j["field"]);
  ChevVec v(sys, field);
  if (j.contains("e")) {
    if (!j["e"].is_object()) throw std::invalid_argument("\"e\" must map root coordinates to hex");
    for (const auto& [key, val] : j["e"].items()) v.e(sys.require_index(parse_root(key, sys.rank()))) += fel_in_field(field, val);
  }
  if (j.contains("h")) {
    const json& h = j["h"];
    if (!h.is_array() || static_cast<int>(h.size()) != sys.rank())
      throw std::invalid_argument("\"h\" must list " + std::to_string(sys.rank()) + " coefficients");
    for (int i = 0; i < sys.rank(); ++i) v.h(i) = fel_in_field(field, h[static_cast<std::size_t>(i)]);
  }
  return v;
}

json label_to_json(const OrbitLabel& label, const Field& field) {
  static constexpr const char* kinds[] = {"Zero", "Singular", "Shiny", "Luminous", "Fam"};
  json j = {{"kind", kinds[static_cast<int>(label.kind)]}};
  if (label.kind == OrbitKind::Fam) {
    j["s"] = to_hex(label.s);
    j["c"] = to_hex(label.c);
  }
  if (auto adj = adjective(label, field)) j["adjective"] = *adj;
  return j;
}

OrbitLabel label_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("label needs \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "Zero") return OrbitLabel::zero();
  if (kind == "Singular") return OrbitLabel::singular();
  if (kind == "Shiny") return OrbitLabel::shiny();
  if (kind == "Luminous") return OrbitLabel::luminous();
  if (kind == "Fam") {
    if (!j.contains("s") || !j.contains("c")) throw std::invalid_argument("Fam label needs \"s\" and \"c\"");
    return OrbitLabel::fam(fel_from_hex(j["s"].get<std::string>()), fel_from_hex(j["c"].get<std::string>()));
  }
  throw std::invalid_argument("unknown label kind '" + kind + "'");
}

json word_to_json(const RootSystem& sys, const GroupWord& w) {
  json out = json::array();
  for (const Factor& f : w.factors()) out.push_back({to_string(sys.root(f.root)), to_hex(f.scalar)});
  return out;
}

json signature_to_json(const Signature& sig) {
  json j = {{"zero", sig.is_zero}, {"t", to_hex(sig.t)}, {"class", to_hex(sig.cls)}};
  j["rank_profile"] = sig.rank_profile ? json::array({sig.rank_profile->first, sig.rank_profile->second}) : json(nullptr);
  return j;
}

json rootsys_to_json(const RootSystem& sys) {
  json roots = json::array();
  for (const Root& r : sys.roots()) roots.push_back(to_string(r));
  json layers = json::object();
  for (int i = -2; i <= 2; ++i) layers[std::to_string(i)] = sys.layer(i).size();
  return {{"phi", std::string(to_string(sys.id()))},
          {"rank", sys.rank()},
          {"roots", roots},
          {"delta", to_string(sys.root(sys.delta()))},
          {"alpha_k", sys.alpha_k() + 1},
          {"layer_sizes", layers}};
}

}  // namespace chevorb
