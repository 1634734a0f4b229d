#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmaps/permutation.hpp"

namespace pmaps {

/// A freely reduced word over numbered generators. Letter +(i+1) stands for
/// generator i and -(i+1) for its inverse.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  static Word generator(std::size_t index) {
    return Word({static_cast<int>(index) + 1});
  }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word power(long long n) const;
  /// v^-1 w v
  Word conjugated_by(const Word& v) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// [a, b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

enum class InputMode { presentation, permutation, matrix };

struct PermDecl {
  std::string name;
  /// 1-based cycles as written.
  std::vector<std::vector<Point>> cycles;
  friend bool operator==(const PermDecl&, const PermDecl&) = default;
};

struct MatDecl {
  std::string name;
  /// Row-major [[a, b], [c, d]] as written (not reduced).
  std::array<long long, 4> entries{};
  std::uint64_t prime = 0;
  friend bool operator==(const MatDecl&, const MatDecl&) = default;
};

enum class MapKind { oriented, flagged };

struct MapDecl {
  std::string name;
  MapKind kind = MapKind::oriented;
  std::optional<Word> t;  // flagged maps only
  Word r;
  Word l;
  friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

/// Parsed contents of a group file. Words anywhere in the file refer to
/// `symbols`, the names declared by `gens`, `perm` or `mat` in order.
struct GroupFile {
  std::string name;
  InputMode mode = InputMode::presentation;
  std::vector<std::string> symbols;
  Presentation presentation;  // presentation mode
  std::vector<PermDecl> perms;  // permutation mode
  std::vector<MatDecl> mats;    // matrix mode
  std::vector<MapDecl> maps;

  const MapDecl* find_map(std::string_view map_name) const;

  friend bool operator==(const GroupFile&, const GroupFile&) = default;
};

/// Largest exponent magnitude accepted by the parser, and largest word it
/// will expand.
inline constexpr long long kMaxExponent = 1'000'000;
inline constexpr std::size_t kMaxWordLength = 10'000'000;

/// Throws ParseError with the 1-based line and column of the problem.
GroupFile parse_group_file(std::string_view text);

/// Canonical text form; parse_group_file(print_group_file(f)) == f.
std::string print_group_file(const GroupFile& file);

std::string print_word(const Word& w, const std::vector<std::string>& names);

}  // namespace pmaps
