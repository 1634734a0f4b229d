#include "pmaps_cli/loading.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pmaps/errors.hpp"

namespace pmaps::cli {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedFile load_group_file(const std::filesystem::path& path,
                           const RealizeOptions& options) {
  LoadedFile loaded;
  loaded.text = read_text(path);
  loaded.file = parse_group_file(loaded.text);
  loaded.realized = realize(loaded.file, options);
  return loaded;
}

AnyMap map_from_decl(const LoadedFile& loaded, const MapDecl& decl) {
  const auto& rg = loaded.realized;
  auto ev = [&](const Word& w) { return evaluate(*rg.group, rg.symbols, w); };
  if (decl.kind == MapKind::oriented) {
    return OrientedMap(rg.group, ev(decl.r), ev(decl.l));
  }
  return FlaggedMap(rg.group, ev(*decl.t), ev(decl.r), ev(decl.l));
}

const MapDecl& select_map(const GroupFile& file, std::string_view name) {
  if (name.empty()) {
    if (file.maps.size() != 1) {
      throw ContractViolation("file declares " + std::to_string(file.maps.size()) +
                              " maps; select one with --map");
    }
    return file.maps.front();
  }
  const MapDecl* decl = file.find_map(name);
  if (!decl) throw ContractViolation("no map named " + std::string(name));
  return *decl;
}

Elem symbol_element(const LoadedFile& loaded, std::string_view name) {
  const auto& symbols = loaded.file.symbols;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] == name) return loaded.realized.symbols[i];
  }
  throw ContractViolation("no symbol named " + std::string(name));
}

}  // namespace pmaps::cli
