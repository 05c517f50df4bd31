#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "veech/error.hpp"
#include "veech/surface.hpp"

#include <random>

using namespace veech;

namespace {

FreeWord word(std::string_view text) { return parse_free_word(text); }
TriangleWord tw(std::string_view text) { return parse_triangle_word(text); }

FreeWord random_word(std::mt19937& rng, int n, int length) {
  std::uniform_int_distribution<int> gen(1, n), sign(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return FreeWord(letters);
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce(std::vector<int>{1, -1}).empty());
  CHECK(reduce(std::vector<int>{-4, 2, 1, 1, 2}).letters() == std::vector<int>{-4, 2, 1, 1, 2});
  CHECK(reduce(std::vector<int>{2, -3, 3, -2, 1}).letters() == std::vector<int>{1});
  CHECK(to_string(word("x4^-1 x2 x1^2 x2")) == "x4^-1 x2 x1^2 x2");
  CHECK(to_string(FreeWord{}) == "1");
  CHECK(word("1").empty());
}

TEST_CASE("reduce is idempotent and never lengthens") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> letters;
    for (int i = 0; i < 12; ++i) {
      int g = gen(rng);
      if (g != 0) letters.push_back(g);
    }
    const auto once = reduce(letters);
    CHECK(once.size() <= letters.size());
    CHECK(reduce(once.letters()) == once);
    for (std::size_t i = 0; i + 1 < once.size(); ++i) CHECK(once.letters()[i] != -once.letters()[i + 1]);
  }
}

TEST_CASE("concat_inverse") {
  CHECK(concat_inverse(tw("RT"), tw("R")) == tw("R T R^-1"));
  CHECK(concat_inverse(tw("RTR"), tw("RTR")).empty());
  CHECK(concat_inverse(tw("RR"), tw("R")) == tw("R"));
}

TEST_CASE("apply_rule") {
  const PolygonParams p(4);
  CHECK(apply_rule(gamma_R(p), word("x2")) == word("x3"));
  CHECK(apply_rule(gamma_T(p), FreeWord{}).empty());
  CHECK(apply_rule(gamma_T(p), word("x1 x3")) == word("x1 x4^-1 x2 x1^2 x3"));
  CHECK(apply_rule(gamma_R(p), word("x4^-1")) == word("x1"));
}

TEST_CASE("composition coherence") {
  std::mt19937 rng(11);
  for (int n : {4, 5, 6, 7}) {
    const PolygonParams p(n);
    const std::vector<SubstitutionRule> rules{gamma_R(p), gamma_T(p), derive_inverse(gamma_T(p))};
    for (const auto& a : rules)
      for (const auto& b : rules)
        for (int trial = 0; trial < 20; ++trial) {
          const auto w = random_word(rng, n, 6);
          CHECK(apply_rule(compose_rules(a, b), w) == apply_rule(a, apply_rule(b, w)));
        }
  }
}

TEST_CASE("triangle word serialization") {
  CHECK(to_string(TriangleWord{}) == "I");
  CHECK(to_string(tw("RTR^-1")) == "R T R^-1");
  CHECK(tw("R T R^-1") == tw("RTR^{-1}"));
  CHECK(tw("(RT)^3(RTRTR)^{-1}") == tw("RTRTRT R^-1 T^-1 R^-1 T^-1 R^-1"));
  CHECK(tw("R^3(RTR^3T)^{-1}") == tw("R R R T^-1 R^-1 R^-1 R^-1 T^-1 R^-1"));
  CHECK(tw("RTR^3TR") == tw("R T R R R T R"));
  CHECK(tw("R^-2") == tw("R^-1 R^-1"));
  CHECK(tw("I").empty());
  CHECK(tw("R R^-1").empty());
  for (const auto* text : {"R", "T R^-1 T^-1", "R R T R R R T^-1"}) CHECK(to_string(tw(text)) == text);
  CHECK_THROWS_AS(tw("RX"), Error);
  CHECK_THROWS_AS(tw("(RT"), Error);
}
