#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace veech {

/// Permutation of {0, ..., m-1} stored as its list of images. Points are
/// acted on from the right: point p followed by permutation s is s[p].
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::uint32_t degree);

/// The permutation "first, then second".
Permutation compose(const Permutation& first, const Permutation& second);

Permutation inverse(const Permutation& p);

bool is_bijection(const Permutation& p, std::uint32_t degree);

std::uint64_t order(const Permutation& p);

/// Cycles in order of their smallest point, each starting at that point.
std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p);

std::size_t count_cycles(const Permutation& p);

bool is_transitive(std::span<const Permutation> gens, std::uint32_t degree);

// Rooted Schreier graph encodings.
//
// Points are relabelled in breadth-first order from the root, visiting
// generators in order. The encoding lists the label of root-relabelled
// p * gens[i] at position label(p) * gens.size() + i. Two transitive actions
// with roots r1, r2 have equal encodings iff there is an equivariant
// bijection sending r1 to r2, i.e. iff Stab(r1) == Stab(r2) as subgroups of
// the free group on the generators.

std::vector<std::uint32_t> rooted_encoding(std::span<const Permutation> gens,
                                           std::uint32_t root);

/// Same as rooted_encoding(gens, root) == encoding, with early exit.
bool matches_encoding(std::span<const Permutation> gens, std::uint32_t root,
                      std::span<const std::uint32_t> encoding);

}  // namespace veech
