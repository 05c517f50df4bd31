#include "veech/actions.hpp"

#include "veech/error.hpp"

namespace veech {

MatrixModD abelianize(const SubstitutionRule& rule, std::int64_t d) {
  const int n = rule.rank();
  MatrixModD m = MatrixModD::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto sums = exponent_sums(rule.image(i + 1), n);
    for (int r = 0; r < n; ++r) m(r, i) = mod(sums[static_cast<std::size_t>(r)], d);
  }
  return m;
}

MatrixModD phi_of_letter(TriangleLetter letter, const PolygonParams& params, std::int64_t d) {
  return abelianize(rule_of_letter(letter, params), d);
}

Permutation evaluate(const FreeWord& w, const PermTuple& tuple, const PermTuple& inverses) {
  const auto degree = tuple.empty() ? 0u : static_cast<std::uint32_t>(tuple.front().size());
  Permutation out(degree);
  for (std::uint32_t p = 0; p < degree; ++p) {
    auto x = p;
    for (int g : w.letters()) x = g > 0 ? tuple[g - 1][x] : inverses[-g - 1][x];
    out[p] = x;
  }
  return out;
}

ActionState negate(const ActionState& state) {
  ActionState out = state;
  if (out.matrix) out.matrix = reduced(-*out.matrix, out.modulus).eval();
  if (out.matrix_inverse) out.matrix_inverse = reduced(-*out.matrix_inverse, out.modulus).eval();
  if (out.tuple)
    for (auto& p : *out.tuple) p = inverse(p);
  if (out.mirror)
    for (auto& p : *out.mirror) p = inverse(p);
  return out;
}

namespace {
std::array<SubstitutionRule, 4> letter_rules(const PolygonParams& params) {
  return {rule_of_letter(kR, params), rule_of_letter(kRInv, params), rule_of_letter(kT, params),
          rule_of_letter(kTInv, params)};
}
}  // namespace

ActionModel::ActionModel(const PolygonParams& params, std::optional<std::int64_t> modulus,
                         std::optional<PermTuple> fiber_action)
    : params_(params),
      modulus_(modulus),
      fiber_action_(std::move(fiber_action)),
      rules_(letter_rules(params)) {
  if (modulus_ && *modulus_ < 1) throw Error(ErrorKind::invalid_argument, "modulus must be >= 1");
  if (fiber_action_ && fiber_action_->size() != static_cast<std::size_t>(params.n()))
    throw Error(ErrorKind::invalid_argument, "fiber action must have one permutation per generator");
  const auto d = modulus_.value_or(1);
  for (std::size_t i = 0; i < rules_.size(); ++i) phis_[i] = abelianize(rules_[i], d);
}

ActionState ActionModel::initial() const {
  ActionState s;
  s.modulus = modulus();
  if (modulus_) {
    s.matrix = identity_mod(params_.n(), *modulus_);
    s.matrix_inverse = s.matrix;
  }
  if (fiber_action_) {
    s.tuple = *fiber_action_;
    s.mirror.emplace();
    for (const auto& p : *fiber_action_) s.mirror->push_back(inverse(p));
  }
  return s;
}

ActionState ActionModel::step(const ActionState& state, TriangleLetter letter) const {
  ActionState out;
  out.word = state.word.then(letter);
  out.modulus = state.modulus;
  if (state.matrix) {
    out.matrix = mod_product(*state.matrix, phi(letter), state.modulus);
    out.matrix_inverse = mod_product(phi(letter.inverse()), *state.matrix_inverse, state.modulus);
  }
  const auto advance = [&](const PermTuple& old) {
    PermTuple inverses;
    inverses.reserve(old.size());
    for (const auto& p : old) inverses.push_back(inverse(p));
    PermTuple next;
    next.reserve(old.size());
    for (const auto& image : rule(letter).images()) next.push_back(evaluate(image, old, inverses));
    return next;
  };
  if (state.tuple) out.tuple = advance(*state.tuple);
  if (state.mirror) out.mirror = advance(*state.mirror);
  return out;
}

ActionState ActionModel::state_of(const TriangleWord& w) const {
  auto s = initial();
  for (const auto& l : w.letters()) s = step(s, l);
  return s;
}

}  // namespace veech
