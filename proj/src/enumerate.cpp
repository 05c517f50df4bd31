#include "veech/enumerate.hpp"

#include "veech/error.hpp"

#include <deque>
#include <optional>
#include <set>
#include <unordered_map>

namespace veech {

namespace {

struct EncodingHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Finds the representative in the same coset as `state`, registering nothing.
class RepIndex {
 public:
  explicit RepIndex(const MembershipContext& ctx) : ctx_(ctx) {}

  std::optional<std::uint32_t> find(const ActionState& state) const {
    std::optional<std::uint32_t> by_abelian, by_permutation;
    if (ctx_.uses_abelian()) {
      auto it = abelian_.find(abelian_coset_key(ctx_, state));
      if (it != abelian_.end()) by_abelian = it->second;
    }
    if (ctx_.uses_permutation()) {
      auto it = permutation_.find(permutation_coset_key(ctx_, state));
      if (it != permutation_.end()) by_permutation = it->second;
    }
    if (ctx_.mode() == MembershipMode::cross_checked && by_abelian != by_permutation)
      throw Error(ErrorKind::oracle_disagreement,
                  "oracle disagreement on coset of word '" + to_string(state.word) + "'");
    return ctx_.uses_abelian() ? by_abelian : by_permutation;
  }

  void insert(const ActionState& state, std::uint32_t index) {
    if (ctx_.uses_abelian()) abelian_.emplace(abelian_coset_key(ctx_, state), index);
    if (ctx_.uses_permutation()) {
      // Indices only grow, so emplace keeps the earliest match as a linear scan would.
      permutation_.emplace(permutation_coset_key(ctx_, state), index);
      permutation_.emplace(permutation_coset_alias(ctx_, state), index);
    }
  }

 private:
  const MembershipContext& ctx_;
  std::unordered_map<SubgroupCanonicalForm, std::uint32_t, SubgroupCanonicalFormHash> abelian_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, EncodingHash> permutation_;
};

}  // namespace

std::uint64_t default_cap(const MembershipContext& ctx) {
  if (ctx.V()) return sl_order(ctx.params().n(), ctx.V()->modulus());
  return 100000;
}

EnumerationResult enumerate(const MembershipContext& ctx, const EnumerationOptions& options) {
  const auto cap = options.cap == 0 ? default_cap(ctx) : options.cap;
  const auto& model = ctx.model();

  EnumerationResult result;
  std::vector<ActionState> states;
  std::set<TriangleWord> seen_generators;
  RepIndex index(ctx);

  result.rep.emplace_back();
  states.push_back(model.initial());
  if (options.strategy == ScanStrategy::indexed) index.insert(states.front(), 0);
  result.perm_T.push_back(kUnset);
  result.perm_R.push_back(kUnset);

  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const auto a = queue.front();
    queue.pop_front();
    for (const auto letter : {kT, kR}) {
      auto successor = model.step(states[a], letter);

      std::optional<std::uint32_t> match;
      if (options.strategy == ScanStrategy::indexed) {
        match = index.find(successor);
      } else {
        for (std::uint32_t k = 0; k < states.size() && !match; ++k)
          if (is_quotient_member(ctx, successor, states[k])) match = k;
      }

      std::uint32_t target;
      if (match) {
        target = *match;
        auto generator = concat_inverse(successor.word, result.rep[target]);
        if (!generator.empty() && seen_generators.insert(generator).second) result.gen.push_back(std::move(generator));
      } else {
        if (result.rep.size() + 1 > cap)
          throw Error(ErrorKind::cap_exceeded, "cap exceeded: more than " + std::to_string(cap) + " cosets");
        target = static_cast<std::uint32_t>(result.rep.size());
        if (options.strategy == ScanStrategy::indexed) index.insert(successor, target);
        result.rep.push_back(successor.word);
        states.push_back(std::move(successor));
        result.perm_T.push_back(kUnset);
        result.perm_R.push_back(kUnset);
        queue.push_back(target);
      }
      (letter == kT ? result.perm_T : result.perm_R)[a] = target;
    }
  }
  return result;
}

VerifyReport verify(const EnumerationResult& result, const MembershipContext& ctx) {
  VerifyReport report;
  const auto& model = ctx.model();
  const auto count = result.index();
  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };

  report.identity_first = count > 0 && result.rep.front().empty();
  if (!report.identity_first) fail("rep[0] is not the identity");

  const bool perms_total = is_bijection(result.perm_T, static_cast<std::uint32_t>(count)) &&
                           is_bijection(result.perm_R, static_cast<std::uint32_t>(count));
  if (!perms_total) fail("perm_T / perm_R are not permutations of the cosets");

  std::vector<ActionState> states;
  states.reserve(count);
  for (const auto& w : result.rep) states.push_back(model.state_of(w));

  report.distinct_cosets = true;
  for (std::size_t a = 0; a < count && report.distinct_cosets; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (is_quotient_member(ctx, states[a], states[b])) {
        report.distinct_cosets = false;
        fail("rep[" + std::to_string(a) + "] and rep[" + std::to_string(b) + "] lie in the same coset");
        break;
      }

  auto closed = [&](TriangleLetter letter, const Permutation& perm, const char* name) {
    if (!perms_total) return false;
    for (std::size_t a = 0; a < count; ++a) {
      if (!is_quotient_member(ctx, model.step(states[a], letter), states[perm[a]])) {
        fail(std::string("rep[") + std::to_string(a) + "] * " + name + " is not in the coset of rep[" +
             std::to_string(perm[a]) + "]");
        return false;
      }
    }
    return true;
  };
  report.closed_under_T = closed(kT, result.perm_T, "T");
  report.closed_under_R = closed(kR, result.perm_R, "R");

  report.transitive = perms_total && is_transitive(std::vector<Permutation>{result.perm_T, result.perm_R},
                                                   static_cast<std::uint32_t>(count));
  if (perms_total && !report.transitive) fail("coset graph is not connected");

  report.perm_R_order_divides_n = perms_total && ctx.params().n() % static_cast<int>(order(result.perm_R)) == 0;
  if (perms_total && !report.perm_R_order_divides_n) fail("order of perm_R does not divide n");

  report.generators_are_members = true;
  for (const auto& g : result.gen) {
    if (!is_member(ctx, model.state_of(g))) {
      report.generators_are_members = false;
      fail("generator '" + to_string(g) + "' is not in the Veech group");
    }
  }
  return report;
}

}  // namespace veech
