#include "veech/words.hpp"

#include "veech/error.hpp"
#include "veech/surface.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace veech {

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int g : letters) {
    if (g == 0) throw Error(ErrorKind::invalid_argument, "free word letter 0");
    if (!letters_.empty() && letters_.back() == -g)
      letters_.pop_back();
    else
      letters_.push_back(g);
  }
}

FreeWord FreeWord::generator(int index) { return FreeWord({index}); }

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (auto& g : out.letters_) g = -g;
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(letters));
}

FreeWord reduce(std::span<const int> letters) {
  return FreeWord(std::vector<int>(letters.begin(), letters.end()));
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const auto power = static_cast<long>(j - i) * (l[i] > 0 ? 1 : -1);
    if (i > 0) out << ' ';
    out << 'x' << std::abs(l[i]);
    if (power != 1) out << '^' << power;
    i = j;
  }
  return out.str();
}

FreeWord parse_free_word(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first, text.find_last_not_of(" \t") - first + 1) == "1")
    return {};
  std::vector<int> letters;
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) {
    bool negative = false;
    if (allow_sign && i < text.size() && text[i] == '-') {
      negative = true;
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::parse, "expected integer in free word '" + std::string(text) + "'");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = 10 * v + (text[i++] - '0');
    return negative ? -v : v;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == 'x') {
      ++i;
      const auto index = static_cast<int>(read_int(false));
      long power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        power = read_int(true);
      }
      for (long k = 0; k < std::abs(power); ++k) letters.push_back(power > 0 ? index : -index);
    } else {
      throw Error(ErrorKind::parse, "unexpected character in free word '" + std::string(text) + "'");
    }
  }
  return FreeWord(std::move(letters));
}

FreeWord apply_rule(const SubstitutionRule& rule, const FreeWord& w) {
  std::vector<int> out;
  for (int g : w.letters()) {
    const int index = g > 0 ? g : -g;
    if (index > rule.rank())
      throw Error(ErrorKind::invalid_argument, "generator index exceeds rule rank");
    const auto& image = rule.image(index).letters();
    if (g > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) out.push_back(-*it);
    }
  }
  return FreeWord(std::move(out));
}

std::vector<std::int64_t> exponent_sums(const FreeWord& w, int n) {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(n), 0);
  for (int g : w.letters()) sums[static_cast<std::size_t>(std::abs(g) - 1)] += g > 0 ? 1 : -1;
  return sums;
}

TriangleWord::TriangleWord(std::vector<TriangleLetter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1)
      throw Error(ErrorKind::invalid_argument, "triangle letter exponent must be +-1");
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

TriangleWord TriangleWord::inverse() const {
  TriangleWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

TriangleWord TriangleWord::then(TriangleLetter letter) const {
  TriangleWord out = *this;
  if (!out.letters_.empty() && out.letters_.back() == letter.inverse())
    out.letters_.pop_back();
  else
    out.letters_.push_back(letter);
  return out;
}

TriangleWord operator*(const TriangleWord& a, const TriangleWord& b) {
  std::vector<TriangleLetter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return TriangleWord(std::move(letters));
}

TriangleWord concat_inverse(const TriangleWord& b, const TriangleWord& d) {
  return b * d.inverse();
}

std::string to_string(const TriangleWord& w) {
  if (w.empty()) return "I";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.generator == Generator::R ? 'R' : 'T';
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

namespace {

class TriangleWordParser {
 public:
  explicit TriangleWordParser(std::string_view text) : text_(text) {}

  TriangleWord parse() {
    auto letters = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return TriangleWord(std::move(letters));
  }

 private:
  std::vector<TriangleLetter> sequence() {
    std::vector<TriangleLetter> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      auto atom = this->atom();
      skip_space();
      long power = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        power = exponent();
      }
      std::vector<TriangleLetter> inv;
      if (power < 0) inv = TriangleWord(atom).inverse().letters();
      const auto& unit = power < 0 ? inv : atom;
      for (long k = 0; k < std::abs(power); ++k) out.insert(out.end(), unit.begin(), unit.end());
    }
  }

  std::vector<TriangleLetter> atom() {
    const char c = text_[pos_];
    if (c == 'R' || c == 'T') {
      ++pos_;
      return {TriangleLetter{c == 'R' ? Generator::R : Generator::T, 1}};
    }
    if (c == 'I') {
      ++pos_;
      return {};
    }
    if (c == '(') {
      ++pos_;
      auto inner = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected character");
    return {};
  }

  long exponent() {
    skip_space();
    const bool braced = pos_ < text_.size() && text_[pos_] == '{';
    if (braced) ++pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) v = 10 * v + (text_[pos_++] - '0');
    if (braced) {
      if (pos_ >= text_.size() || text_[pos_] != '}') fail("missing '}'");
      ++pos_;
    }
    return negative ? -v : v;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw Error(ErrorKind::parse, std::string(what) + " at offset " + std::to_string(pos_) +
                                      " in triangle word '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TriangleWord parse_triangle_word(std::string_view text) { return TriangleWordParser(text).parse(); }

}  // namespace veech
