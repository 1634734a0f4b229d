#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pmaps/algmap.hpp"
#include "pmaps/classify.hpp"

namespace pmaps::cli {

struct PrimeCore {
  std::uint64_t p = 0;
  std::size_t order = 0;  // |O_p(G)|
  friend bool operator==(const PrimeCore&, const PrimeCore&) = default;
};

struct GroupSummary {
  std::string name;
  std::size_t group_order = 0;
  bool solvable = false;
  std::vector<PrimeCore> o_p;
  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct MapEntry {
  std::string name;
  std::string kind;  // "oriented" or "flagged"
  /// Generators in cycle notation on the group's points, in map order.
  std::vector<std::string> generators;
  Degeneracy degeneracy;
  MapReport report;
  std::optional<bool> vertex_action_primitive;
  std::optional<PMapClassification> classification;
  std::optional<SylowStructure> sylow_structure;
  /// Structural match against the reference quotient shapes.
  std::optional<ExceptionalCase> identification;
  std::optional<std::size_t> class_size;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct Diagnostic {
  std::string severity;  // "error" or "warning"
  std::string code;
  std::string message;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ReportDocument {
  std::string tool = "pmaps";
  std::string version;
  std::string command;
  std::string input_digest;
  std::optional<GroupSummary> group;
  std::vector<MapEntry> maps;
  std::vector<Diagnostic> diagnostics;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// "fnv1a64:" followed by 16 hex digits.
std::string digest(std::string_view bytes);

void to_json(nlohmann::json& j, const PrimeCore& v);
void from_json(const nlohmann::json& j, PrimeCore& v);
void to_json(nlohmann::json& j, const GroupSummary& v);
void from_json(const nlohmann::json& j, GroupSummary& v);
void to_json(nlohmann::json& j, const MapEntry& v);
void from_json(const nlohmann::json& j, MapEntry& v);
void to_json(nlohmann::json& j, const Diagnostic& v);
void from_json(const nlohmann::json& j, Diagnostic& v);
void to_json(nlohmann::json& j, const ReportDocument& v);
void from_json(const nlohmann::json& j, ReportDocument& v);

nlohmann::json exceptional_to_json(const ExceptionalCase& c);
ExceptionalCase exceptional_from_json(const nlohmann::json& j);

}  // namespace pmaps::cli
