#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "veech/error.hpp"
#include "veech/surface.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>

using namespace veech;

namespace {

std::vector<std::string> images_of(const SubstitutionRule& rule) {
  std::vector<std::string> out;
  for (const auto& w : rule.images()) out.push_back(to_string(w));
  return out;
}

SubstitutionRule power(const SubstitutionRule& rule, int k) {
  auto acc = identity_rule(rule.rank());
  for (int i = 0; i < k; ++i) acc = compose_rules(acc, rule);
  return acc;
}

FreeWord word(std::string_view text) { return parse_free_word(text); }

}  // namespace

TEST_CASE("polygon parameters") {
  CHECK_THROWS_AS(PolygonParams(3), Error);
  CHECK(PolygonParams(4).genus_type() == PolygonParams::SurfaceType{2, 1});
  CHECK(PolygonParams(5).genus_type() == PolygonParams::SurfaceType{2, 2});
  CHECK(PolygonParams(8).genus_type() == PolygonParams::SurfaceType{4, 1});
  CHECK(PolygonParams(7).elliptic_order() == 7);
  CHECK(PolygonParams(6).sides() == 12);
}

TEST_CASE("generator matrices") {
  for (int n = 4; n <= 12; ++n) {
    const PolygonParams p(n);
    const auto r = generator_matrix(Generator::R, p);
    const auto t = generator_matrix(Generator::T, p);
    CHECK(std::abs(r.determinant() - 1) < 1e-9);
    CHECK(std::abs(t.determinant() - 1) < 1e-9);
    CHECK(t(0, 1) == doctest::Approx(2 / std::tan(std::numbers::pi / (2 * n))));
    Eigen::Matrix2d rn = Eigen::Matrix2d::Identity();
    for (int i = 0; i < n; ++i) rn = rn * r;
    CHECK((rn + Eigen::Matrix2d::Identity()).norm() < 1e-9);
    const auto w = word_matrix(parse_triangle_word("R T R^-1"), p);
    CHECK((w - r * t * r.inverse()).norm() < 1e-9);
  }
}

TEST_CASE("gamma_R") {
  CHECK(images_of(gamma_R(PolygonParams(4))) == std::vector<std::string>{"x2", "x3", "x4", "x1^-1"});
  CHECK(gamma_R(PolygonParams(5)).image(5) == word("x1^-1"));
  for (int n = 4; n <= 12; ++n) {
    const auto r = gamma_R(PolygonParams(n));
    CHECK(power(r, n) == inversion_rule(n));
    CHECK(power(r, 2 * n) == identity_rule(n));
  }
}

TEST_CASE("gamma_T, n = 4") {
  const auto t = gamma_T(PolygonParams(4));
  CHECK(images_of(t) ==
        std::vector<std::string>{"x1", "x4^-1 x2 x1^2 x2", "x4^-1 x2 x1^2 x3", "x4^-1 x2 x1^2 x4"});
  CHECK(apply_rule(t, word("x4^-1 x2")) == word("x4^-1 x2"));
}

TEST_CASE("gamma_T, n = 5") {
  const auto t = gamma_T(PolygonParams(5));
  CHECK(apply_rule(t, word("x5^-1 x1")) == word("x5^-1 x1"));
  CHECK(apply_rule(t, word("x4^-1 x2")) == word("x4^-1 x2"));
  CHECK(images_of(t) == std::vector<std::string>{"x5^-1 x1^2", "x4^-1 x2 x5^-1 x1 x2", "x4^-1 x2 x5^-1 x1 x3",
                                                 "x4^-1 x2 x5^-1 x1 x4", "x5^-1 x1 x5"});
}

TEST_CASE("gamma_T, n = 6 against a hand expansion") {
  // x_i -> (x_{8-i}^-1 x_i) ... (x_6^-1 x_2) x_1^2 x_i, written out for i = 2, 3, 4
  // and completed from the fixed products x_6^-1 x_2 and x_5^-1 x_3.
  const auto t = gamma_T(PolygonParams(6));
  CHECK(images_of(t) == std::vector<std::string>{
                            "x1",
                            "x6^-1 x2 x1^2 x2",
                            "x5^-1 x3 x6^-1 x2 x1^2 x3",
                            "x5^-1 x3 x6^-1 x2 x1^2 x4",
                            "x5^-1 x3 x6^-1 x2 x1^2 x5",
                            "x6^-1 x2 x1^2 x6",
                        });
}

TEST_CASE("gamma_T fixes the listed products") {
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const auto t = gamma_T(PolygonParams(n));
    if (n % 2 == 0) {
      CHECK(t.image(1) == FreeWord::generator(1));
      for (int i = 2; i <= n / 2; ++i) {
        const auto product = FreeWord::generator(n + 2 - i).inverse() * FreeWord::generator(i);
        CHECK(apply_rule(t, product) == product);
      }
    } else {
      for (int i = 1; i <= (n - 1) / 2; ++i) {
        const auto product = FreeWord::generator(n + 1 - i).inverse() * FreeWord::generator(i);
        CHECK(apply_rule(t, product) == product);
      }
    }
  }
}

TEST_CASE("gamma_R and gamma_T are automorphisms") {
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const PolygonParams p(n);
    for (const auto& rule : {gamma_R(p), gamma_T(p)}) {
      const auto inv = derive_inverse(rule);
      CHECK(compose_rules(rule, inv) == identity_rule(n));
      CHECK(compose_rules(inv, rule) == identity_rule(n));
      for (const auto& w : rule.images()) CHECK(reduce(w.letters()) == w);
    }
  }
}

TEST_CASE("compose_rules") {
  const PolygonParams p(4);
  CHECK(compose_rules(gamma_R(p), identity_rule(4)) == gamma_R(p));
  CHECK(compose_rules(identity_rule(4), gamma_T(p)) == gamma_T(p));
  CHECK(compose_rules(gamma_T(p), derive_inverse(gamma_T(p))) == identity_rule(4));
  CHECK(rule_of_letter(kTInv, p) == derive_inverse(gamma_T(p)));
  CHECK(rule_of_letter(kR, p) == gamma_R(p));
}
