#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "pmaps/algmap.hpp"

namespace pmaps {

/// D(m, e): the dipole map on <x, y | x^m = y^2 = 1, x^y = x^e>.
struct Dipole {
  std::uint64_t m = 0;
  std::uint64_t e = 0;
  friend bool operator==(const Dipole&, const Dipole&) = default;
};

/// DM: one vertex, semi-edges, l collapsed to 1. Payload is the quotient
/// group order.
struct DiscSemistar {
  std::size_t order = 0;
  friend bool operator==(const DiscSemistar&, const DiscSemistar&) = default;
};

/// EM: one vertex, semi-edges, l collapsed onto t.
struct SphereSemistar {
  std::size_t order = 0;
  friend bool operator==(const SphereSemistar&, const SphereSemistar&) = default;
};

/// C(3,2): the nonorientable regular map of the doubled triangle.
struct C32 {
  friend bool operator==(const C32&, const C32&) = default;
};

using ExceptionalCase = std::variant<Dipole, DiscSemistar, SphereSemistar, C32>;

/// "D(3,2)", "DM(6)", "EM(6)", "C(3,2)".
std::string label(const ExceptionalCase& c);

enum class OrientationStatus { chiral, reflexible, nonorientable, orientable_normal };

std::string_view to_string(OrientationStatus s);

struct PMapClassification {
  std::uint64_t p = 0;
  unsigned k = 0;
  bool solvable = false;
  bool normal = false;
  std::optional<ExceptionalCase> exceptional_case;
  /// |G / O_p(G)|
  std::size_t quotient_order = 0;
  OrientationStatus orientation_status = OrientationStatus::chiral;
  friend bool operator==(const PMapClassification&,
                         const PMapClassification&) = default;
};

/// (p, k) when the vertex count is p^k with k >= 1.
std::optional<std::pair<std::uint64_t, unsigned>> detect_p_map(const OrientedMap& m);
std::optional<std::pair<std::uint64_t, unsigned>> detect_p_map(const FlaggedMap& m);

/// ContractViolation for a map whose vertex count is not a prime power,
/// TheoremViolation when the computed structure contradicts the
/// classification of nonnormal p-maps.
PMapClassification classify(const OrientedMap& m);
PMapClassification classify(const FlaggedMap& m);

/// Two-vertex quotient as D(m, e) with x the rotation and y the arc
/// reversal (for a flagged map, of its orientation-preserving part).
/// ClassificationError when the shape does not match, including e == 1.
Dipole identify_dipole(const OrientedMap& q);
Dipole identify_dipole(const FlaggedMap& q);

/// One-vertex quotient on a dihedral group of order 2 * odd.
/// ClassificationError unless l collapsed to 1 or to t.
std::variant<DiscSemistar, SphereSemistar> identify_semistar(const FlaggedMap& q);

/// Order 24 group isomorphic to S4, 3 vertices, 6 edges, 4 faces,
/// nonorientable.
bool identify_c32(const FlaggedMap& q);

/// Whether a group of order 24 is S4 (has a of order 4 and b of order 2
/// with (ab)^3 = 1 generating it).
bool is_s4(const FiniteGroup& g);

struct TheoremCheck {
  bool solvable = false;
  bool normal = false;
  /// "normal", "p2_cyclic_by_z2", "p2_cyclic_by_klein4" or "p3_s4".
  std::string branch;
  /// Odd order of the normal cyclic subgroup in the p = 2 branches.
  std::uint64_t m = 0;
};

/// Solvable, and normal or one of the two exceptional quotient shapes.
/// Throws TheoremViolation when neither holds.
TheoremCheck verify_main_theorem(const OrientedMap& m);
TheoremCheck verify_main_theorem(const FlaggedMap& m);

enum class SylowCase { direct_product_elementary, central_product_extraspecial, other };

std::string_view to_string(SylowCase c);

struct SylowStructure {
  SylowCase case_tag = SylowCase::other;
  std::size_t sylow_order = 0;
  std::size_t p0_order = 0;
  /// Rank of T in P = P0 x T (direct product case).
  unsigned complement_rank = 0;
  /// |E| in P = E * P0 (central product case).
  std::size_t extraspecial_order = 0;
  friend bool operator==(const SylowStructure&, const SylowStructure&) = default;
};

/// Whether G acts primitively on the vertices (right cosets of the vertex
/// stabiliser).
bool vertex_action_primitive(const OrientedMap& m);
bool vertex_action_primitive(const FlaggedMap& m);

/// Decomposes the Sylow p-subgroup P of a normal p-map with primitive
/// vertex action, with P0 the part of P in the core of the vertex
/// stabiliser. ContractViolation when the hypotheses fail, TheoremViolation
/// when neither decomposition can be certified.
SylowStructure verify_sylow_structure(const OrientedMap& m);
SylowStructure verify_sylow_structure(const FlaggedMap& m);

}  // namespace pmaps
