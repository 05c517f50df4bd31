#include "veech/membership.hpp"

#include "veech/error.hpp"

#include <algorithm>
#include <numeric>

namespace veech {

std::string to_string(MembershipMode mode) {
  switch (mode) {
    case MembershipMode::abelian_fast:
      return "abelian_fast";
    case MembershipMode::permutation_general:
      return "permutation_general";
    case MembershipMode::cross_checked:
      return "cross_checked";
  }
  return "unknown";
}

ModeRequest parse_mode_request(const std::string& text) {
  if (text == "auto") return ModeRequest::automatic;
  if (text == "abelian") return ModeRequest::abelian;
  if (text == "permutation") return ModeRequest::permutation;
  if (text == "cross") return ModeRequest::cross;
  throw Error(ErrorKind::invalid_argument, "unknown mode '" + text + "' (auto|abelian|permutation|cross)");
}

MembershipContext::MembershipContext(ActionModel model, MembershipMode mode)
    : model_(std::move(model)), mode_(mode) {}

MembershipContext MembershipContext::make(const CoverSpec& spec, ModeRequest request) {
  const PolygonParams params(rank_of(spec));

  std::optional<MonodromyCover> cover;
  std::optional<SubgroupCanonicalForm> V;
  CoverStructure structure;
  std::optional<std::int64_t> modulus;

  if (const auto* abelian = std::get_if<AbelianCoverSpec>(&spec)) {
    V = canonical_subgroup(*abelian);
    modulus = abelian->d;
    structure.is_galois = true;
    structure.deck_abelian = true;
    structure.generator_orders = generator_orders(*abelian);
    std::int64_t exponent = 1;
    for (auto o : structure.generator_orders) exponent = std::lcm(exponent, static_cast<std::int64_t>(o));
    structure.exponent = exponent;
    structure.V = V;
    structure.order_condition = true;
    for (auto o : structure.generator_orders)
      structure.order_condition = structure.order_condition && (o == 1 || o == static_cast<std::uint64_t>(exponent));
    if (request != ModeRequest::abelian && request != ModeRequest::automatic) cover = to_monodromy(*abelian);
    if (request == ModeRequest::automatic && !structure.order_condition) cover = to_monodromy(*abelian);
  } else {
    cover = std::get<MonodromyCover>(spec);
    structure = analyze(*cover);
    if (structure.deck_abelian) {
      V = structure.V;
      modulus = structure.exponent;
    }
  }

  MembershipMode mode{};
  switch (request) {
    case ModeRequest::abelian:
      if (!V) throw Error(ErrorKind::invalid_argument, "abelian mode requires a Galois cover with abelian deck group");
      mode = MembershipMode::abelian_fast;
      cover.reset();
      break;
    case ModeRequest::permutation:
      mode = MembershipMode::permutation_general;
      modulus.reset();
      break;
    case ModeRequest::cross:
      if (!V) throw Error(ErrorKind::invalid_argument, "cross mode requires a Galois cover with abelian deck group");
      mode = MembershipMode::cross_checked;
      break;
    case ModeRequest::automatic:
      if (!V) {
        mode = MembershipMode::permutation_general;
      } else if (structure.order_condition) {
        mode = MembershipMode::abelian_fast;
        cover.reset();
      } else {
        mode = MembershipMode::cross_checked;
      }
      break;
  }

  std::optional<PermTuple> fiber;
  if (cover) fiber = cover->perms;
  MembershipContext ctx(ActionModel(params, modulus, std::move(fiber)), mode);
  ctx.V_ = std::move(V);
  ctx.structure_ = std::move(structure);
  if (cover) {
    ctx.base_signature_ = rooted_encoding(cover->perms, cover->basepoint);
    ctx.cover_ = std::move(cover);
  }
  return ctx;
}

namespace {

void require_matrix(const MembershipContext& ctx, const ActionState& s) {
  if (!ctx.V() || !s.matrix) throw Error(ErrorKind::invalid_argument, "abelian membership needs V and a matrix state");
}

void require_tuple(const MembershipContext& ctx, const ActionState& s) {
  if (!ctx.cover() || !s.tuple) throw Error(ErrorKind::invalid_argument, "permutation membership needs a tuple state");
}

bool stabilizes(const SubgroupCanonicalForm& V, const MatrixModD& m) {
  const auto& rows = V.rows();
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    const VectorModD image = reduced(m * rows.row(r).transpose(), V.modulus());
    if (!V.contains(image)) return false;
  }
  return true;
}

bool some_root_matches(const PermTuple& tuple, std::span<const std::uint32_t> target) {
  const auto degree = static_cast<std::uint32_t>(tuple.front().size());
  for (std::uint32_t p = 0; p < degree; ++p)
    if (matches_encoding(tuple, p, target)) return true;
  return false;
}

bool matches_up_to_sign(const PermTuple& tuple, std::span<const std::uint32_t> target) {
  if (some_root_matches(tuple, target)) return true;
  PermTuple negated;
  negated.reserve(tuple.size());
  for (const auto& p : tuple) negated.push_back(inverse(p));
  return some_root_matches(negated, target);
}

[[noreturn]] void disagree(const TriangleWord& w, bool abelian, bool permutation) {
  throw Error(ErrorKind::oracle_disagreement,
              "oracle disagreement on word '" + to_string(w) + "': abelian=" + (abelian ? "true" : "false") +
                  " permutation=" + (permutation ? "true" : "false"));
}

}  // namespace

bool is_member_abelian(const MembershipContext& ctx, const ActionState& state) {
  require_matrix(ctx, state);
  return stabilizes(*ctx.V(), *state.matrix);
}

bool is_member_permutation(const MembershipContext& ctx, const ActionState& state) {
  require_tuple(ctx, state);
  return matches_up_to_sign(*state.tuple, ctx.base_signature());
}

bool is_member(const MembershipContext& ctx, const ActionState& state) {
  switch (ctx.mode()) {
    case MembershipMode::abelian_fast:
      return is_member_abelian(ctx, state);
    case MembershipMode::permutation_general:
      return is_member_permutation(ctx, state);
    case MembershipMode::cross_checked: {
      const bool a = is_member_abelian(ctx, state);
      const bool p = is_member_permutation(ctx, state);
      if (a != p) disagree(state.word, a, p);
      return a;
    }
  }
  return false;
}

bool is_quotient_member_abelian(const MembershipContext& ctx, const ActionState& b, const ActionState& d) {
  require_matrix(ctx, b);
  require_matrix(ctx, d);
  return stabilizes(*ctx.V(), mod_product(*b.matrix, *d.matrix_inverse, b.modulus));
}

bool is_quotient_member_permutation(const MembershipContext& ctx, const ActionState& b, const ActionState& d) {
  require_tuple(ctx, b);
  require_tuple(ctx, d);
  // Same answer as is_member on the word b d^-1. The sign sits at the right
  // end of that word, so the negative branch compares against the mirror of D:
  // gamma_B gamma_D^-1 iota (H) = H_p  <=>  Stab_{tau_B}(p) = gamma_D^-1(iota H).
  const auto base = ctx.cover()->basepoint;
  return some_root_matches(*b.tuple, rooted_encoding(*d.tuple, base)) ||
         some_root_matches(*b.tuple, rooted_encoding(*d.mirror, base));
}

bool is_quotient_member(const MembershipContext& ctx, const ActionState& b, const ActionState& d) {
  switch (ctx.mode()) {
    case MembershipMode::abelian_fast:
      return is_quotient_member_abelian(ctx, b, d);
    case MembershipMode::permutation_general:
      return is_quotient_member_permutation(ctx, b, d);
    case MembershipMode::cross_checked: {
      const bool a = is_quotient_member_abelian(ctx, b, d);
      const bool p = is_quotient_member_permutation(ctx, b, d);
      if (a != p) disagree(concat_inverse(b.word, d.word), a, p);
      return a;
    }
  }
  return false;
}

SubgroupCanonicalForm abelian_coset_key(const MembershipContext& ctx, const ActionState& state) {
  require_matrix(ctx, state);
  const auto& V = *ctx.V();
  MatrixModD image = reduced(V.rows() * state.matrix_inverse->transpose(), V.modulus());
  return canonicalize(image, V.modulus());
}

namespace {
std::vector<std::uint32_t> least_encoding(const PermTuple& tuple) {
  const auto degree = static_cast<std::uint32_t>(tuple.front().size());
  std::vector<std::uint32_t> best;
  for (std::uint32_t p = 0; p < degree; ++p) {
    auto enc = rooted_encoding(tuple, p);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}
}  // namespace

std::vector<std::uint32_t> permutation_coset_key(const MembershipContext& ctx, const ActionState& state) {
  require_tuple(ctx, state);
  return least_encoding(*state.tuple);
}

std::vector<std::uint32_t> permutation_coset_alias(const MembershipContext& ctx, const ActionState& state) {
  require_tuple(ctx, state);
  if (!state.mirror) throw Error(ErrorKind::invalid_argument, "permutation coset alias needs a mirror tuple");
  return least_encoding(*state.mirror);
}

}  // namespace veech
