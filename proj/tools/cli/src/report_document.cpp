#include "pmaps_cli/report_document.hpp"

#include <cstdio>
#include <stdexcept>

namespace pmaps::cli {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

GenusKind genus_kind_from(const std::string& s) {
  if (s == "orientable_genus") return GenusKind::orientable_genus;
  if (s == "crosscap_number") return GenusKind::crosscap_number;
  if (s == "degenerate") return GenusKind::degenerate;
  throw std::invalid_argument("unknown genus_kind " + s);
}

OrientationStatus orientation_from(const std::string& s) {
  for (auto v : {OrientationStatus::chiral, OrientationStatus::reflexible,
                 OrientationStatus::nonorientable,
                 OrientationStatus::orientable_normal}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown orientation_status " + s);
}

SylowCase sylow_case_from(const std::string& s) {
  for (auto v : {SylowCase::direct_product_elementary,
                 SylowCase::central_product_extraspecial, SylowCase::other}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown sylow case " + s);
}

json classification_to_json(const PMapClassification& c) {
  return {
      {"p", c.p},
      {"k", c.k},
      {"solvable", c.solvable},
      {"normal", c.normal},
      {"exceptional_case",
       c.exceptional_case ? exceptional_to_json(*c.exceptional_case) : json(nullptr)},
      {"quotient_order", c.quotient_order},
      {"orientation_status", std::string(to_string(c.orientation_status))},
  };
}

PMapClassification classification_from_json(const json& j) {
  PMapClassification c;
  j.at("p").get_to(c.p);
  j.at("k").get_to(c.k);
  j.at("solvable").get_to(c.solvable);
  j.at("normal").get_to(c.normal);
  if (!j.at("exceptional_case").is_null()) {
    c.exceptional_case = exceptional_from_json(j.at("exceptional_case"));
  }
  j.at("quotient_order").get_to(c.quotient_order);
  c.orientation_status = orientation_from(j.at("orientation_status").get<std::string>());
  return c;
}

json sylow_to_json(const SylowStructure& s) {
  return {
      {"case", std::string(to_string(s.case_tag))},
      {"sylow_order", s.sylow_order},
      {"p0_order", s.p0_order},
      {"complement_rank", s.complement_rank},
      {"extraspecial_order", s.extraspecial_order},
  };
}

SylowStructure sylow_from_json(const json& j) {
  SylowStructure s;
  s.case_tag = sylow_case_from(j.at("case").get<std::string>());
  j.at("sylow_order").get_to(s.sylow_order);
  j.at("p0_order").get_to(s.p0_order);
  j.at("complement_rank").get_to(s.complement_rank);
  j.at("extraspecial_order").get_to(s.extraspecial_order);
  return s;
}

json degeneracy_to_json(const Degeneracy& d) {
  json tags = json::array();
  if (d.t_trivial) tags.push_back("t_trivial");
  if (d.r_trivial) tags.push_back("r_trivial");
  if (d.l_trivial) tags.push_back("l_trivial");
  if (d.l_equals_t) tags.push_back("l_equals_t");
  return tags;
}

Degeneracy degeneracy_from_json(const json& j) {
  Degeneracy d;
  for (const auto& tag : j) {
    const auto s = tag.get<std::string>();
    if (s == "t_trivial") d.t_trivial = true;
    else if (s == "r_trivial") d.r_trivial = true;
    else if (s == "l_trivial") d.l_trivial = true;
    else if (s == "l_equals_t") d.l_equals_t = true;
    else throw std::invalid_argument("unknown degeneracy tag " + s);
  }
  return d;
}

}  // namespace

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

json exceptional_to_json(const ExceptionalCase& c) {
  json j;
  if (auto* d = std::get_if<Dipole>(&c)) {
    j = {{"kind", "dipole"}, {"m", d->m}, {"e", d->e}};
  } else if (auto* s = std::get_if<DiscSemistar>(&c)) {
    j = {{"kind", "disc_semistar"}, {"order", s->order}};
  } else if (auto* s2 = std::get_if<SphereSemistar>(&c)) {
    j = {{"kind", "sphere_semistar"}, {"order", s2->order}};
  } else {
    j = {{"kind", "c32"}};
  }
  j["label"] = label(c);
  return j;
}

ExceptionalCase exceptional_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "dipole") {
    return Dipole{j.at("m").get<std::uint64_t>(), j.at("e").get<std::uint64_t>()};
  }
  if (kind == "disc_semistar") return DiscSemistar{j.at("order").get<std::size_t>()};
  if (kind == "sphere_semistar") return SphereSemistar{j.at("order").get<std::size_t>()};
  if (kind == "c32") return C32{};
  throw std::invalid_argument("unknown exceptional case " + kind);
}

void to_json(json& j, const PrimeCore& v) { j = {{"p", v.p}, {"order", v.order}}; }

void from_json(const json& j, PrimeCore& v) {
  j.at("p").get_to(v.p);
  j.at("order").get_to(v.order);
}

void to_json(json& j, const GroupSummary& v) {
  j = {{"name", v.name},
       {"group_order", v.group_order},
       {"solvable", v.solvable},
       {"o_p", v.o_p}};
}

void from_json(const json& j, GroupSummary& v) {
  j.at("name").get_to(v.name);
  j.at("group_order").get_to(v.group_order);
  j.at("solvable").get_to(v.solvable);
  j.at("o_p").get_to(v.o_p);
}

void to_json(json& j, const MapEntry& v) {
  const MapReport& r = v.report;
  j = {
      {"name", v.name},
      {"kind", v.kind},
      {"generators", v.generators},
      {"degenerate", degeneracy_to_json(v.degeneracy)},
      {"vertices", r.vertices},
      {"edges", r.edges},
      {"faces", r.faces},
      {"euler", r.euler},
      {"orientable", r.orientable},
      {"genus_kind", std::string(to_string(r.genus_kind))},
      {"genus", r.genus},
      {"simple_graph", r.simple_graph},
      {"reflexible", optional_json(r.reflexible)},
      {"valency", r.valency},
      {"vertex_action_primitive", optional_json(v.vertex_action_primitive)},
      {"classification",
       v.classification ? classification_to_json(*v.classification) : json(nullptr)},
      {"sylow_structure",
       v.sylow_structure ? sylow_to_json(*v.sylow_structure) : json(nullptr)},
      {"identification",
       v.identification ? exceptional_to_json(*v.identification) : json(nullptr)},
      {"class_size", optional_json(v.class_size)},
  };
}

void from_json(const json& j, MapEntry& v) {
  j.at("name").get_to(v.name);
  j.at("kind").get_to(v.kind);
  j.at("generators").get_to(v.generators);
  v.degeneracy = degeneracy_from_json(j.at("degenerate"));
  MapReport& r = v.report;
  j.at("vertices").get_to(r.vertices);
  j.at("edges").get_to(r.edges);
  j.at("faces").get_to(r.faces);
  j.at("euler").get_to(r.euler);
  j.at("orientable").get_to(r.orientable);
  r.genus_kind = genus_kind_from(j.at("genus_kind").get<std::string>());
  j.at("genus").get_to(r.genus);
  j.at("simple_graph").get_to(r.simple_graph);
  r.reflexible = optional_from<bool>(j, "reflexible");
  j.at("valency").get_to(r.valency);
  v.vertex_action_primitive = optional_from<bool>(j, "vertex_action_primitive");
  v.classification.reset();
  if (!j.at("classification").is_null()) {
    v.classification = classification_from_json(j.at("classification"));
  }
  v.sylow_structure.reset();
  if (!j.at("sylow_structure").is_null()) {
    v.sylow_structure = sylow_from_json(j.at("sylow_structure"));
  }
  v.identification.reset();
  if (!j.at("identification").is_null()) {
    v.identification = exceptional_from_json(j.at("identification"));
  }
  v.class_size = optional_from<std::size_t>(j, "class_size");
}

void to_json(json& j, const Diagnostic& v) {
  j = {{"severity", v.severity}, {"code", v.code}, {"message", v.message}};
}

void from_json(const json& j, Diagnostic& v) {
  j.at("severity").get_to(v.severity);
  j.at("code").get_to(v.code);
  j.at("message").get_to(v.message);
}

void to_json(json& j, const ReportDocument& v) {
  j = {
      {"tool", v.tool},
      {"version", v.version},
      {"command", v.command},
      {"input_digest", v.input_digest},
      {"group", optional_json(v.group)},
      {"maps", v.maps},
      {"diagnostics", v.diagnostics},
  };
}

void from_json(const json& j, ReportDocument& v) {
  j.at("tool").get_to(v.tool);
  j.at("version").get_to(v.version);
  j.at("command").get_to(v.command);
  j.at("input_digest").get_to(v.input_digest);
  v.group = optional_from<GroupSummary>(j, "group");
  j.at("maps").get_to(v.maps);
  j.at("diagnostics").get_to(v.diagnostics);
}

}  // namespace pmaps::cli
