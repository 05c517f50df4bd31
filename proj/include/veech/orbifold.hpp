#pragma once

#include "veech/enumerate.hpp"
#include "veech/surface.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace veech {

enum class Side { R_inverse, R, T_inverse, T };

const char* to_string(Side side);

/// One identification of the fundamental domain: `side` of tile `from` is
/// glued to the opposite side of tile `to`.
struct SidePairing {
  std::uint32_t from = 0;
  Side side = Side::T;
  std::uint32_t to = 0;

  friend auto operator<=>(const SidePairing&, const SidePairing&) = default;
};

/// T-side of a glued to the T^-1-side of perm_T(a), then R-side of a glued
/// to the R^-1-side of perm_R(a), for a in rep order.
std::vector<SidePairing> side_pairings(const EnumerationResult& result);

struct OrbifoldSignature {
  int genus = 0;
  int punctures = 0;
  /// Ascending.
  std::vector<int> cone_points;
  int v_infinity = 0;
  int v_cot = 0;
  int v_cone = 0;

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

/// Vertex cycles of the quadrilateral tiling: infinity corners follow
/// perm_T, i-corners follow perm_R and cot corners follow
/// a -> perm_R^-1(perm_T(a)). Throws Error(internal) if an R-cycle length
/// does not divide n or the Euler count is not even.
OrbifoldSignature signature(const EnumerationResult& result, const PolygonParams& params);

/// Cycles of a -> perm_R^-1(perm_T(a)).
Permutation cot_corner_map(const EnumerationResult& result);

}  // namespace veech
