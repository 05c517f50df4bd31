#pragma once

#include "veech/membership.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace veech {

/// How a successor is matched against the known representatives. Both give
/// the same result, since at most one representative can match.
enum class ScanStrategy {
  /// Membership test of B * D^-1 for each D in insertion order.
  linear,
  /// Hash lookup on the coset invariant.
  indexed,
};

struct EnumerationOptions {
  /// Maximum number of coset representatives; 0 means default_cap(ctx).
  std::uint64_t cap = 0;
  ScanStrategy strategy = ScanStrategy::indexed;
};

/// Coset representatives, Schreier generators and the right action of T and
/// R on Gamma(X) \ <R, T>.
struct EnumerationResult {
  std::vector<TriangleWord> rep;
  std::vector<TriangleWord> gen;
  Permutation perm_T;
  Permutation perm_R;

  std::size_t index() const { return rep.size(); }

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

/// |SL(n, Z_d)| for abelian contexts; 100000 otherwise.
std::uint64_t default_cap(const MembershipContext& ctx);

/// Breadth-first Reidemeister-Schreier enumeration with successors A*T then
/// A*R. Throws Error(cap_exceeded) when the representative list would grow
/// past the cap.
EnumerationResult enumerate(const MembershipContext& ctx, const EnumerationOptions& options = {});

struct VerifyReport {
  bool identity_first = false;
  bool distinct_cosets = false;
  bool closed_under_T = false;
  bool closed_under_R = false;
  bool transitive = false;
  bool perm_R_order_divides_n = false;
  bool generators_are_members = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Re-checks the invariants of a result by direct membership calls.
VerifyReport verify(const EnumerationResult& result, const MembershipContext& ctx);

}  // namespace veech
