#pragma once

#include "veech/perm.hpp"
#include "veech/surface.hpp"
#include "veech/words.hpp"
#include "veech/zmod.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace veech {

/// Entry i is the fiber permutation of gamma_A(x_{i+1}).
using PermTuple = std::vector<Permutation>;

/// Column i is the exponent-sum vector of the image of x_{i+1}, mod d.
MatrixModD abelianize(const SubstitutionRule& rule, std::int64_t d);

/// Phi_d of a single letter.
MatrixModD phi_of_letter(TriangleLetter letter, const PolygonParams& params, std::int64_t d);

/// The fiber permutation of the word w when x_i acts by tuple[i-1].
Permutation evaluate(const FreeWord& w, const PermTuple& tuple, const PermTuple& inverses);

/// Action data attached to a triangle word A: Phi_d(A) with its inverse, the
/// tuple (rho(gamma_A(x_i)))_i, and the same tuple for the mirrored monodromy
/// x_i -> sigma_i^-1. The mirror is the tuple of R^n A.
struct ActionState {
  TriangleWord word;
  std::int64_t modulus = 1;
  std::optional<MatrixModD> matrix;
  std::optional<MatrixModD> matrix_inverse;
  std::optional<PermTuple> tuple;
  std::optional<PermTuple> mirror;
};

/// -A, taken as A R^n: matrix negated, every tuple permutation inverted. The
/// word is kept, since [A] = [-A] projectively.
ActionState negate(const ActionState& state);

/// Per-letter data for stepping states; one instance per (polygon, cover).
class ActionModel {
 public:
  /// `modulus` enables the matrix path, `fiber_action` (the monodromy
  /// sigma_1..sigma_n) the permutation path.
  ActionModel(const PolygonParams& params, std::optional<std::int64_t> modulus,
              std::optional<PermTuple> fiber_action);

  const PolygonParams& params() const { return params_; }
  bool has_matrix() const { return modulus_.has_value(); }
  bool has_tuple() const { return fiber_action_.has_value(); }
  std::int64_t modulus() const { return modulus_.value_or(1); }
  const std::optional<PermTuple>& fiber_action() const { return fiber_action_; }

  const SubstitutionRule& rule(TriangleLetter letter) const { return rules_[slot(letter)]; }
  const MatrixModD& phi(TriangleLetter letter) const { return phis_[slot(letter)]; }

  ActionState initial() const;
  /// State of word * letter; Phi multiplied on the right, tuple entries
  /// replaced by gamma_letter(x_i) evaluated in the old tuple.
  ActionState step(const ActionState& state, TriangleLetter letter) const;
  ActionState state_of(const TriangleWord& w) const;

 private:
  static std::size_t slot(TriangleLetter l) {
    return (l.generator == Generator::R ? 0 : 2) + (l.exponent < 0 ? 1 : 0);
  }

  PolygonParams params_;
  std::optional<std::int64_t> modulus_;
  std::optional<PermTuple> fiber_action_;
  std::array<SubstitutionRule, 4> rules_;
  std::array<MatrixModD, 4> phis_;
};

}  // namespace veech
