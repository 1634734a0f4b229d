#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pmaps/census.hpp"
#include "pmaps/group_input.hpp"
#include "pmaps/presentation.hpp"

namespace pmaps::cli {

struct LoadedFile {
  std::string text;
  GroupFile file;
  RealizedGroup realized;
};

/// Throws std::runtime_error when the file cannot be read, ParseError on bad
/// syntax and ResourceError when realisation exceeds the limits.
std::string read_text(const std::filesystem::path& path);
LoadedFile load_group_file(const std::filesystem::path& path,
                           const RealizeOptions& options);

/// Map declared by `decl`, built on the realised group.
AnyMap map_from_decl(const LoadedFile& loaded, const MapDecl& decl);

/// Declared map by name; the only map when `name` is empty.
/// ContractViolation when absent or ambiguous.
const MapDecl& select_map(const GroupFile& file, std::string_view name);

/// Element index of a declared symbol. ContractViolation when unknown.
Elem symbol_element(const LoadedFile& loaded, std::string_view name);

}  // namespace pmaps::cli
