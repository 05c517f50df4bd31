#pragma once

#include "veech/actions.hpp"
#include "veech/covers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace veech {

enum class MembershipMode { abelian_fast, permutation_general, cross_checked };

/// Requested mode; `automatic` picks abelian_fast when the cover is Galois
/// abelian with generator orders {d} or {1, d}, cross_checked for other
/// Galois abelian covers and permutation_general otherwise.
enum class ModeRequest { automatic, abelian, permutation, cross };

std::string to_string(MembershipMode mode);
ModeRequest parse_mode_request(const std::string& text);

/// Decides [A] in Gamma(X) for states produced by its action model.
class MembershipContext {
 public:
  static MembershipContext make(const CoverSpec& spec, ModeRequest request = ModeRequest::automatic);

  MembershipMode mode() const { return mode_; }
  const PolygonParams& params() const { return model_.params(); }
  const ActionModel& model() const { return model_; }
  const std::optional<SubgroupCanonicalForm>& V() const { return V_; }
  const std::optional<MonodromyCover>& cover() const { return cover_; }
  const CoverStructure& structure() const { return structure_; }
  /// Encoding of Stab(basepoint) as a rooted Schreier graph.
  const std::vector<std::uint32_t>& base_signature() const { return base_signature_; }

  bool uses_abelian() const { return mode_ != MembershipMode::permutation_general; }
  bool uses_permutation() const { return mode_ != MembershipMode::abelian_fast; }

 private:
  MembershipContext(ActionModel model, MembershipMode mode);

  ActionModel model_;
  MembershipMode mode_;
  std::optional<SubgroupCanonicalForm> V_;
  std::optional<MonodromyCover> cover_;
  CoverStructure structure_;
  std::vector<std::uint32_t> base_signature_;
};

/// Phi_d(A)(V) = V, tested as inclusion on the generators of V.
bool is_member_abelian(const MembershipContext& ctx, const ActionState& state);

/// Some fiber point p has Stab_{sigma o gamma_{+-A}}(p) = Stab_sigma(basepoint).
bool is_member_permutation(const MembershipContext& ctx, const ActionState& state);

/// Dispatch by mode. Throws Error(oracle_disagreement) when cross-checked
/// paths differ.
bool is_member(const MembershipContext& ctx, const ActionState& state);

// [B] * [D]^-1 in Gamma(X), decided from the states of B and D alone.

bool is_quotient_member_abelian(const MembershipContext& ctx, const ActionState& b, const ActionState& d);
bool is_quotient_member_permutation(const MembershipContext& ctx, const ActionState& b, const ActionState& d);
bool is_quotient_member(const MembershipContext& ctx, const ActionState& b, const ActionState& d);

// Coset invariants.
//
// Abelian: B d^-1 is a member iff the keys of B and D agree.
// Permutation: B d^-1 is a member iff the key of B equals the key or the alias
// of D. For covers that are not Galois abelian this need not be symmetric in
// B and D, because gamma_T and gamma_{R^n} do not commute up to an inner
// automorphism.

/// Howell form of Phi_d(A)^-1 V.
SubgroupCanonicalForm abelian_coset_key(const MembershipContext& ctx, const ActionState& state);
/// Least rooted encoding of sigma o gamma_A over all roots.
std::vector<std::uint32_t> permutation_coset_key(const MembershipContext& ctx, const ActionState& state);
/// Least rooted encoding of the mirror tuple of A over all roots.
std::vector<std::uint32_t> permutation_coset_alias(const MembershipContext& ctx, const ActionState& state);

}  // namespace veech
