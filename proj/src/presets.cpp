#include "veech/presets.hpp"

#include "veech/error.hpp"
#include "veech/surface.hpp"

#include <charconv>

namespace veech {

namespace {

VectorModD row(std::initializer_list<std::int64_t> entries) {
  VectorModD v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (auto x : entries) v(i++) = x;
  return v;
}

VectorModD unit(int n, int i, std::int64_t scale = 1) {
  VectorModD v = VectorModD::Zero(n);
  v(i - 1) = scale;
  return v;
}

AbelianCoverSpec fig14(std::int64_t d) {
  return {4, d, {unit(4, 2), unit(4, 3), unit(4, 4)}};
}

AbelianCoverSpec fig15(std::int64_t d) {
  return {4, d, {row({d - 1, 1, 0, 0}), row({d - 1, 0, 1, 0}), row({d - 1, 0, 0, 1})}};
}

// Double cover of the 4k-gon surface with V the kernel of the sum of the
// odd-index coordinates.
AbelianCoverSpec fig12(int k) {
  const int n = 2 * k;
  AbelianCoverSpec spec{n, 2, {}};
  for (int j = 1; j <= k; ++j) spec.generators.push_back(unit(n, 2 * j));
  for (int j = 2; j <= k; ++j) spec.generators.push_back(unit(n, 1) + unit(n, 2 * j - 1));
  return spec;
}

// Double cover of the 4k-gon surface with V = ker(v_1 + v_{k+1}).
AbelianCoverSpec fig13(int k) {
  const int n = 2 * k;
  AbelianCoverSpec spec{n, 2, {}};
  for (int j = 2; j <= n; ++j)
    if (j != k + 1) spec.generators.push_back(unit(n, j));
  spec.generators.push_back(unit(n, 1) + unit(n, k + 1));
  return spec;
}

MonodromyCover trivial(int n) {
  PolygonParams{n};
  return {n, 1, std::vector<Permutation>(static_cast<std::size_t>(n), Permutation{0}), 0};
}

int parse_parameter(const std::string& name, const std::string& text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw Error(ErrorKind::invalid_argument, "bad parameter in preset '" + name + "'");
  return value;
}

}  // namespace

CoverSpec preset(const std::string& name) {
  if (name == "fig6") return AbelianCoverSpec{4, 2, {row({0, 1, 0, 0}), row({0, 0, 0, 1}), row({1, 0, 1, 0})}};
  if (name == "fig10") return fig14(2);
  if (name == "fig11") return AbelianCoverSpec{4, 4, {row({3, 1, 0, 0}), row({1, 0, 1, 0}), row({1, 0, 0, 1})}};

  const auto colon = name.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::invalid_argument, "unknown preset '" + name + "'");
  const auto family = name.substr(0, colon);
  const int k = parse_parameter(name, name.substr(colon + 1));

  if (family == "fig12" || family == "fig13") {
    if (k < 2) throw Error(ErrorKind::invalid_argument, "preset '" + name + "' needs k >= 2");
    return family == "fig12" ? fig12(k) : fig13(k);
  }
  if (family == "fig14" || family == "fig15") {
    if (k < 2) throw Error(ErrorKind::invalid_argument, "preset '" + name + "' needs d >= 2");
    return family == "fig14" ? fig14(k) : fig15(k);
  }
  if (family == "trivial") return trivial(k);
  throw Error(ErrorKind::invalid_argument, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names{"fig6", "fig10", "fig11"};
  for (int k : {2, 3}) names.push_back("fig12:" + std::to_string(k));
  for (int k : {2, 3}) names.push_back("fig13:" + std::to_string(k));
  for (int d = 2; d <= 11; ++d) names.push_back("fig14:" + std::to_string(d));
  for (int d = 2; d <= 14; ++d) names.push_back("fig15:" + std::to_string(d));
  for (int n = 4; n <= 8; ++n) names.push_back("trivial:" + std::to_string(n));
  return names;
}

std::string preset_file_stem(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return name;
  const auto family = name.substr(0, colon);
  const char* tag = (family == "fig14" || family == "fig15") ? "_d" : "_n";
  return family + tag + name.substr(colon + 1);
}

}  // namespace veech
