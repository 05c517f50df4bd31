#include "veech/orbifold.hpp"

#include "veech/error.hpp"

#include <algorithm>

namespace veech {

const char* to_string(Side side) {
  switch (side) {
    case Side::R_inverse: return "R^-1";
    case Side::R: return "R";
    case Side::T_inverse: return "T^-1";
    case Side::T: return "T";
  }
  return "?";
}

std::vector<SidePairing> side_pairings(const EnumerationResult& result) {
  std::vector<SidePairing> out;
  out.reserve(2 * result.index());
  for (std::uint32_t a = 0; a < result.index(); ++a) {
    out.push_back({a, Side::T, result.perm_T[a]});
    out.push_back({a, Side::R, result.perm_R[a]});
  }
  return out;
}

Permutation cot_corner_map(const EnumerationResult& result) {
  return compose(result.perm_T, inverse(result.perm_R));
}

OrbifoldSignature signature(const EnumerationResult& result, const PolygonParams& params) {
  const int n = params.n();
  OrbifoldSignature sig;
  sig.v_infinity = static_cast<int>(count_cycles(result.perm_T));
  sig.v_cot = static_cast<int>(count_cycles(cot_corner_map(result)));

  for (const auto& cycle : cycles(result.perm_R)) {
    const int k = static_cast<int>(cycle.size());
    if (n % k != 0)
      throw Error(ErrorKind::internal, "R-corner cycle of length " + std::to_string(k) + " does not divide n");
    ++sig.v_cone;
    if (k < n) sig.cone_points.push_back(n / k);
  }
  std::sort(sig.cone_points.begin(), sig.cone_points.end());

  const int v = sig.v_infinity + sig.v_cot + sig.v_cone;
  const int twice_genus = 2 + static_cast<int>(result.index()) - v;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw Error(ErrorKind::internal, "Euler count gives a non-integral genus");
  sig.genus = twice_genus / 2;
  sig.punctures = sig.v_infinity + sig.v_cot;
  return sig;
}

}  // namespace veech
