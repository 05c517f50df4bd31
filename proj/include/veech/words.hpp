#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace veech {

class SubstitutionRule;

/// Element of pi_1 of the base surface: a freely reduced word in x_1..x_n.
/// Letters are signed generator indices, +i for x_i and -i for x_i^-1.
class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces `letters`.
  explicit FreeWord(std::vector<int> letters);

  static FreeWord generator(int index);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

FreeWord reduce(std::span<const int> letters);

/// "x4^-1 x2 x1^2 x2"; the empty word is "1".
std::string to_string(const FreeWord& w);
FreeWord parse_free_word(std::string_view text);

/// Letterwise substitution; x_i^-1 maps to the inverse of the image of x_i.
FreeWord apply_rule(const SubstitutionRule& rule, const FreeWord& w);

/// Exponent sum of each generator (length n).
std::vector<std::int64_t> exponent_sums(const FreeWord& w, int n);

enum class Generator : std::uint8_t { R, T };

struct TriangleLetter {
  Generator generator;
  int exponent;  // +1 or -1

  TriangleLetter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const TriangleLetter&, const TriangleLetter&) = default;
  friend auto operator<=>(const TriangleLetter&, const TriangleLetter&) = default;
};

inline constexpr TriangleLetter kR{Generator::R, 1};
inline constexpr TriangleLetter kT{Generator::T, 1};
inline constexpr TriangleLetter kRInv{Generator::R, -1};
inline constexpr TriangleLetter kTInv{Generator::T, -1};

/// Word in R, T and their inverses, freely reduced in the two letters. No
/// relations of the triangle group are applied, so distinct words may denote
/// the same element.
class TriangleWord {
 public:
  TriangleWord() = default;
  explicit TriangleWord(std::vector<TriangleLetter> letters);

  const std::vector<TriangleLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  TriangleWord inverse() const;
  TriangleWord then(TriangleLetter letter) const;

  friend TriangleWord operator*(const TriangleWord& a, const TriangleWord& b);
  friend bool operator==(const TriangleWord&, const TriangleWord&) = default;
  friend auto operator<=>(const TriangleWord&, const TriangleWord&) = default;

 private:
  std::vector<TriangleLetter> letters_;
};

/// The reduced word b * d^-1.
TriangleWord concat_inverse(const TriangleWord& b, const TriangleWord& d);

/// "R T R^-1"; the empty word is "I".
std::string to_string(const TriangleWord& w);

/// Accepts the serialized form and the compact notation used for
/// hand-written generators: "RT^2R^-1", "(RT)^3(RTRTR)^-1", "R^{-2}", "I".
TriangleWord parse_triangle_word(std::string_view text);

}  // namespace veech
