#pragma once

#include "veech/words.hpp"

#include <Eigen/Core>

#include <vector>

namespace veech {

/// Parameters of the translation surface glued from a regular 2n-gon.
class PolygonParams {
 public:
  /// Throws Error(invalid_argument) for n < 4.
  explicit PolygonParams(int n);

  int n() const { return n_; }
  int sides() const { return 2 * n_; }
  /// Order of [R] in the projective group; R^n = -I.
  int elliptic_order() const { return n_; }

  struct SurfaceType {
    int genus;
    int punctures;
    friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
  };
  SurfaceType genus_type() const;

  /// cot(pi / 2n): the cusps of the standard domain sit at +-this value.
  double cot_half_angle() const;

  friend bool operator==(const PolygonParams&, const PolygonParams&) = default;

 private:
  int n_;
};

/// Numeric generator matrix; used for rendering only.
Eigen::Matrix2d generator_matrix(Generator g, const PolygonParams& params);
Eigen::Matrix2d generator_matrix(TriangleLetter letter, const PolygonParams& params);
Eigen::Matrix2d word_matrix(const TriangleWord& w, const PolygonParams& params);

/// Endomorphism of the free group of rank n, given by the images of x_1..x_n.
class SubstitutionRule {
 public:
  explicit SubstitutionRule(std::vector<FreeWord> images);

  int rank() const { return static_cast<int>(images_.size()); }
  /// Image of x_index, 1-based.
  const FreeWord& image(int index) const { return images_[index - 1]; }
  const std::vector<FreeWord>& images() const { return images_; }

  friend bool operator==(const SubstitutionRule&, const SubstitutionRule&) = default;

 private:
  std::vector<FreeWord> images_;
};

SubstitutionRule identity_rule(int rank);
/// x_i -> x_i^-1 for all i; the automorphism induced by -I.
SubstitutionRule inversion_rule(int rank);

/// x_i -> x_{i+1} (i < n), x_n -> x_1^-1.
SubstitutionRule gamma_R(const PolygonParams& params);

/// The multi-twist automorphism induced by the horizontal shear. The images of
/// the first half of the generators are written as chains of fixed products
/// x_{n+2-k}^-1 x_k (n even) or x_{n+1-k}^-1 x_k (n odd); the remaining
/// generators are solved from those fixed products.
SubstitutionRule gamma_T(const PolygonParams& params);

/// a o b: x_i -> a(b(x_i)).
SubstitutionRule compose_rules(const SubstitutionRule& a, const SubstitutionRule& b);

/// Inverse by substitution solving. Handles signed generator permutations and
/// rules of the form x_i -> W_i x_i with every W_i fixed by the rule. The
/// result is checked against the identity; throws otherwise.
SubstitutionRule derive_inverse(const SubstitutionRule& rule);

/// gamma of a single letter, including inverse letters.
SubstitutionRule rule_of_letter(TriangleLetter letter, const PolygonParams& params);

}  // namespace veech
