#pragma once

#include "veech/perm.hpp"
#include "veech/zmod.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace veech {

/// Covering of the 2n-gon surface given by its monodromy: perms[i] is the
/// action of x_{i+1} on the fiber over the polygon centre (0-based points).
struct MonodromyCover {
  int n = 0;
  std::uint32_t degree = 1;
  std::vector<Permutation> perms;
  std::uint32_t basepoint = 0;

  /// Throws Error(validation) for malformed data and
  /// Error(disconnected_cover) when the monodromy is not transitive.
  void validate() const;

  friend bool operator==(const MonodromyCover&, const MonodromyCover&) = default;
};

/// Abelian covering attached to V = nu(pi_1(X)) inside Z_d^n.
struct AbelianCoverSpec {
  int n = 0;
  std::int64_t d = 1;
  std::vector<VectorModD> generators;

  void validate() const;

  friend bool operator==(const AbelianCoverSpec& a, const AbelianCoverSpec& b) {
    return a.n == b.n && a.d == b.d && a.generators == b.generators;
  }
};

using CoverSpec = std::variant<MonodromyCover, AbelianCoverSpec>;

int rank_of(const CoverSpec& spec);

SubgroupCanonicalForm canonical_subgroup(const AbelianCoverSpec& spec);

/// Order of the image of each x_i in Z_d^n / V.
std::vector<std::uint64_t> generator_orders(const AbelianCoverSpec& spec);

/// Realize the abelian cover as a monodromy cover on Z_d^n / V; points are
/// the cosets in breadth-first discovery order from 0. Throws if the degree
/// exceeds max_degree.
MonodromyCover to_monodromy(const AbelianCoverSpec& spec, std::uint64_t max_degree = 1u << 20);

struct CoverStructure {
  bool is_galois = false;
  bool deck_abelian = false;
  /// Exponent of the deck group, present when Galois and abelian.
  std::optional<std::int64_t> exponent;
  /// V in Z_d^n, present when Galois and abelian.
  std::optional<SubgroupCanonicalForm> V;
  std::vector<std::uint64_t> generator_orders;
  /// Orders of the x_i images are exactly {d} or {1, d}.
  bool order_condition = false;
};

CoverStructure analyze(const MonodromyCover& cover);

/// `{"n":4,"cover":{"type":"monodromy","degree":2,"perms":[[2,1],...]}}` or
/// `{"n":4,"cover":{"type":"abelian","d":2,"V":[[0,1,0,0],...]}}`; images in
/// perms are 1-based. Throws Error(parse) or Error(validation).
CoverSpec parse_cover_spec(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const CoverSpec& spec);

}  // namespace veech
