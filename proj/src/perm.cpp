#include "veech/perm.hpp"

#include <limits>
#include <numeric>

namespace veech {

namespace {
constexpr std::uint32_t kUnlabelled = std::numeric_limits<std::uint32_t>::max();
}

Permutation identity_permutation(std::uint32_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool is_bijection(const Permutation& p, std::uint32_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> hit(degree, false);
  for (auto x : p) {
    if (x >= degree || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    auto& cycle = out.emplace_back();
    for (auto x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
  }
  return out;
}

std::size_t count_cycles(const Permutation& p) { return cycles(p).size(); }

std::uint64_t order(const Permutation& p) {
  std::uint64_t result = 1;
  for (const auto& c : cycles(p)) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

bool is_transitive(std::span<const Permutation> gens, std::uint32_t degree) {
  if (degree == 0) return false;
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      auto t = g[queue[head]];
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return queue.size() == degree;
}

std::vector<std::uint32_t> rooted_encoding(std::span<const Permutation> gens,
                                           std::uint32_t root) {
  const std::size_t m = gens.empty() ? 0 : gens.front().size();
  const std::size_t k = gens.size();
  std::vector<std::uint32_t> label(m, kUnlabelled);
  std::vector<std::uint32_t> order_seen;
  order_seen.reserve(m);
  std::vector<std::uint32_t> encoding;
  encoding.reserve(m * k);

  label[root] = 0;
  order_seen.push_back(root);
  for (std::size_t head = 0; head < order_seen.size(); ++head) {
    const auto p = order_seen[head];
    for (std::size_t i = 0; i < k; ++i) {
      const auto t = gens[i][p];
      if (label[t] == kUnlabelled) {
        label[t] = static_cast<std::uint32_t>(order_seen.size());
        order_seen.push_back(t);
      }
      encoding.push_back(label[t]);
    }
  }
  return encoding;
}

bool matches_encoding(std::span<const Permutation> gens, std::uint32_t root,
                      std::span<const std::uint32_t> encoding) {
  const std::size_t m = gens.empty() ? 0 : gens.front().size();
  const std::size_t k = gens.size();
  if (encoding.size() != m * k) return false;
  std::vector<std::uint32_t> label(m, kUnlabelled);
  std::vector<std::uint32_t> order_seen;
  order_seen.reserve(m);

  label[root] = 0;
  order_seen.push_back(root);
  std::size_t pos = 0;
  for (std::size_t head = 0; head < order_seen.size(); ++head) {
    const auto p = order_seen[head];
    for (std::size_t i = 0; i < k; ++i, ++pos) {
      const auto t = gens[i][p];
      if (label[t] == kUnlabelled) {
        label[t] = static_cast<std::uint32_t>(order_seen.size());
        order_seen.push_back(t);
      }
      if (label[t] != encoding[pos]) return false;
    }
  }
  return pos == encoding.size();
}

}  // namespace veech
