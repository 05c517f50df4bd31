#include "veech/surface.hpp"

#include "veech/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace veech {

PolygonParams::PolygonParams(int n) : n_(n) {
  if (n < 4) throw Error(ErrorKind::invalid_argument, "polygon parameter n must be >= 4, got " + std::to_string(n));
}

PolygonParams::SurfaceType PolygonParams::genus_type() const {
  if (n_ % 2 == 0) return {n_ / 2, 1};
  return {n_ / 2, 2};
}

double PolygonParams::cot_half_angle() const {
  return 1.0 / std::tan(std::numbers::pi / (2.0 * n_));
}

Eigen::Matrix2d generator_matrix(Generator g, const PolygonParams& params) {
  Eigen::Matrix2d m;
  if (g == Generator::R) {
    const double a = std::numbers::pi / params.n();
    m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  } else {
    m << 1.0, 2.0 * params.cot_half_angle(), 0.0, 1.0;
  }
  return m;
}

Eigen::Matrix2d generator_matrix(TriangleLetter letter, const PolygonParams& params) {
  Eigen::Matrix2d m = generator_matrix(letter.generator, params);
  if (letter.exponent > 0) return m;
  // inverse of an SL(2) matrix
  Eigen::Matrix2d inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv;
}

Eigen::Matrix2d word_matrix(const TriangleWord& w, const PolygonParams& params) {
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  for (const auto& l : w.letters()) m = m * generator_matrix(l, params);
  return m;
}

SubstitutionRule::SubstitutionRule(std::vector<FreeWord> images) : images_(std::move(images)) {
  const int n = rank();
  for (const auto& w : images_)
    for (int g : w.letters())
      if (std::abs(g) > n) throw Error(ErrorKind::invalid_argument, "rule image uses a generator beyond its rank");
}

SubstitutionRule identity_rule(int rank) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));
  return SubstitutionRule(std::move(images));
}

SubstitutionRule inversion_rule(int rank) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(-i));
  return SubstitutionRule(std::move(images));
}

SubstitutionRule gamma_R(const PolygonParams& params) {
  const int n = params.n();
  std::vector<FreeWord> images;
  for (int i = 1; i < n; ++i) images.push_back(FreeWord::generator(i + 1));
  images.push_back(FreeWord::generator(-1));
  return SubstitutionRule(std::move(images));
}

SubstitutionRule gamma_T(const PolygonParams& params) {
  const int n = params.n();
  std::vector<FreeWord> images(static_cast<std::size_t>(n));
  auto set = [&](int i, FreeWord w) { images[static_cast<std::size_t>(i - 1)] = std::move(w); };
  auto get = [&](int i) -> const FreeWord& { return images[static_cast<std::size_t>(i - 1)]; };

  if (n % 2 == 0) {
    // fixed products p_k = x_{n+2-k}^-1 x_k, k = 2..n/2, and x_1
    const int half = n / 2;
    set(1, FreeWord::generator(1));
    for (int i = 2; i <= half + 1; ++i) {
      std::vector<int> letters;
      for (int k = std::min(i, half); k >= 2; --k) {
        letters.push_back(-(n + 2 - k));
        letters.push_back(k);
      }
      letters.insert(letters.end(), {1, 1, i});
      set(i, FreeWord(std::move(letters)));
    }
    for (int i = 2; i <= half; ++i) {
      const int partner = n + 2 - i;
      set(partner, get(i) * FreeWord({-i, partner}));
    }
  } else {
    // fixed products p_k = x_{n+1-k}^-1 x_k, k = 1..(n-1)/2
    const int half = (n - 1) / 2;
    for (int i = 1; i <= half + 1; ++i) {
      std::vector<int> letters;
      for (int k = std::min(i, half); k >= 1; --k) {
        letters.push_back(-(n + 1 - k));
        letters.push_back(k);
      }
      letters.push_back(i);
      set(i, FreeWord(std::move(letters)));
    }
    for (int i = 1; i <= half; ++i) {
      const int partner = n + 1 - i;
      set(partner, get(i) * FreeWord({-i, partner}));
    }
  }
  return SubstitutionRule(std::move(images));
}

SubstitutionRule compose_rules(const SubstitutionRule& a, const SubstitutionRule& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::invalid_argument, "composing rules of different rank");
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(b.rank()));
  for (const auto& w : b.images()) images.push_back(apply_rule(a, w));
  return SubstitutionRule(std::move(images));
}

SubstitutionRule derive_inverse(const SubstitutionRule& rule) {
  const int n = rule.rank();
  std::vector<FreeWord> inverse_images(static_cast<std::size_t>(n));

  const bool signed_permutation = std::all_of(rule.images().begin(), rule.images().end(),
                                              [](const FreeWord& w) { return w.size() == 1; });
  if (signed_permutation) {
    // x_i -> x_j^s gives x_j -> x_i^s
    for (int i = 1; i <= n; ++i) {
      const int g = rule.image(i).letters().front();
      inverse_images[static_cast<std::size_t>(std::abs(g) - 1)] = FreeWord::generator(g > 0 ? i : -i);
    }
  } else {
    // x_i -> W_i x_i with W_i fixed gives x_i -> W_i^-1 x_i
    for (int i = 1; i <= n; ++i) {
      const auto& letters = rule.image(i).letters();
      if (letters.empty() || letters.back() != i)
        throw Error(ErrorKind::invalid_argument, "cannot derive inverse: image of x" + std::to_string(i) +
                                                     " does not end in x" + std::to_string(i));
      const FreeWord prefix(std::vector<int>(letters.begin(), letters.end() - 1));
      if (apply_rule(rule, prefix) != prefix)
        throw Error(ErrorKind::invalid_argument, "cannot derive inverse: prefix of x" + std::to_string(i) +
                                                     " is not fixed");
      inverse_images[static_cast<std::size_t>(i - 1)] = prefix.inverse() * FreeWord::generator(i);
    }
  }

  SubstitutionRule inverse(std::move(inverse_images));
  if (compose_rules(rule, inverse) != identity_rule(n) || compose_rules(inverse, rule) != identity_rule(n))
    throw Error(ErrorKind::internal, "derived inverse does not invert the rule");
  return inverse;
}

SubstitutionRule rule_of_letter(TriangleLetter letter, const PolygonParams& params) {
  auto rule = letter.generator == Generator::R ? gamma_R(params) : gamma_T(params);
  return letter.exponent > 0 ? rule : derive_inverse(rule);
}

}  // namespace veech
