#include "veech/render.hpp"

#include "veech/error.hpp"
#include "veech/orbifold.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <sstream>

namespace veech {

namespace {

using Complex = std::complex<double>;
constexpr double kTolerance = 1e-9;

// A point of the closed upper half-plane; nullopt is the point at infinity.
using BoundaryPoint = std::optional<Complex>;

BoundaryPoint mobius(const Eigen::Matrix2d& m, BoundaryPoint z) {
  Complex num, den;
  if (z) {
    num = m(0, 0) * *z + m(0, 1);
    den = m(1, 0) * *z + m(1, 1);
  } else {
    num = m(0, 0);
    den = m(1, 0);
  }
  if (std::abs(den) < kTolerance * std::max(1.0, std::abs(num))) return std::nullopt;
  return num / den;
}

bool same_point(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (!a || !b) return !a && !b;
  return std::abs(*a - *b) < 1e-6 * std::max(1.0, std::abs(*a));
}

struct Segment {
  BoundaryPoint p, q;
};

bool same_segment(const Segment& a, const Segment& b) {
  return (same_point(a.p, b.p) && same_point(a.q, b.q)) || (same_point(a.p, b.q) && same_point(a.q, b.p));
}

// Corners of the standard domain and the four sides, indexed by Side.
struct Domain {
  BoundaryPoint infinity, cot_minus, i, cot_plus;
  std::array<Segment, 4> sides;
};

Domain standard_domain(const PolygonParams& params) {
  const double c = params.cot_half_angle();
  Domain d{std::nullopt, Complex(-c, 0), Complex(0, 1), Complex(c, 0), {}};
  const Segment left_arc{d.cot_minus, d.i}, right_arc{d.cot_plus, d.i};
  // The R-side is the image of the R^-1-side under R.
  const auto r = generator_matrix(Generator::R, params);
  const bool r_maps_left_to_right = same_point(mobius(r, d.cot_minus), d.cot_plus);
  d.sides[static_cast<int>(Side::R_inverse)] = r_maps_left_to_right ? left_arc : right_arc;
  d.sides[static_cast<int>(Side::R)] = r_maps_left_to_right ? right_arc : left_arc;
  d.sides[static_cast<int>(Side::T_inverse)] = {d.cot_minus, d.infinity};
  d.sides[static_cast<int>(Side::T)] = {d.cot_plus, d.infinity};
  return d;
}

Side opposite(Side s) {
  switch (s) {
    case Side::R: return Side::R_inverse;
    case Side::R_inverse: return Side::R;
    case Side::T: return Side::T_inverse;
    case Side::T_inverse: return Side::T;
  }
  return s;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(x) < 5e-5 ? 0.0 : x);
  return buf;
}

struct Viewport {
  double x_min, x_max, y_max, scale;
  std::string x(double v) const { return fmt((v - x_min) * scale); }
  std::string y(double v) const { return fmt((y_max - v) * scale); }
};

std::string geodesic_path(const Segment& s, const Viewport& vp) {
  BoundaryPoint p = s.p, q = s.q;
  if (!p) std::swap(p, q);
  std::ostringstream out;
  if (!q) {
    out << "M " << vp.x(p->real()) << ' ' << vp.y(p->imag()) << " L " << vp.x(p->real()) << ' '
        << vp.y(vp.y_max);
    return out.str();
  }
  out << "M " << vp.x(p->real()) << ' ' << vp.y(p->imag()) << ' ';
  const double dx = p->real() - q->real();
  if (std::abs(dx) < kTolerance) {
    out << "L " << vp.x(q->real()) << ' ' << vp.y(q->imag());
    return out.str();
  }
  const double centre = (std::norm(*p) - std::norm(*q)) / (2 * dx);
  const double radius = std::abs(*p - centre) * vp.scale;
  out << "A " << fmt(radius) << ' ' << fmt(radius) << " 0 0 " << (p->real() < q->real() ? 1 : 0) << ' '
      << vp.x(q->real()) << ' ' << vp.y(q->imag());
  return out.str();
}

std::string colour(int k) {
  return "hsl(" + std::to_string((k * 137) % 360) + ",70%,45%)";
}

}  // namespace

RenderFormat parse_render_format(const std::string& text) {
  if (text == "svg") return RenderFormat::svg;
  if (text == "dot") return RenderFormat::dot;
  if (text == "csv") return RenderFormat::csv;
  throw Error(ErrorKind::invalid_argument, "unknown render format '" + text + "' (expected svg, dot or csv)");
}

std::string render_svg(const EnumerationResult& result, const PolygonParams& params) {
  const auto domain = standard_domain(params);
  const auto count = result.index();

  std::vector<std::array<Segment, 4>> tiles(count);
  for (std::size_t a = 0; a < count; ++a) {
    const auto m = word_matrix(result.rep[a], params);
    for (int s = 0; s < 4; ++s)
      tiles[a][s] = {mobius(m, domain.sides[s].p), mobius(m, domain.sides[s].q)};
  }

  // Pair labels for sides that lie on the boundary of the union.
  std::vector<std::array<int, 4>> pair_of(count, {-1, -1, -1, -1});
  int pairs = 0;
  for (const auto& sp : side_pairings(result)) {
    const int s = static_cast<int>(sp.side), t = static_cast<int>(opposite(sp.side));
    if (same_segment(tiles[sp.from][s], tiles[sp.to][t])) continue;
    pair_of[sp.from][s] = pair_of[sp.to][t] = pairs++;
  }

  double x_min = -1, x_max = 1, y_max = 1;
  for (const auto& tile : tiles)
    for (const auto& seg : tile)
      for (const auto& pt : {seg.p, seg.q})
        if (pt) {
          x_min = std::min(x_min, pt->real());
          x_max = std::max(x_max, pt->real());
          y_max = std::max(y_max, pt->imag());
        }
  const double margin = 0.1 * (x_max - x_min);
  y_max = y_max * 1.25 + margin;
  const Viewport vp{x_min - margin, x_max + margin, y_max, 600.0 / (x_max - x_min + 2 * margin)};
  const std::string width = vp.x(vp.x_max), height = vp.y(0.0);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" data-tiles=\"" << count << "\" data-pairs=\""
      << pairs << "\">\n";
  out << "  <line x1=\"0\" y1=\"" << height << "\" x2=\"" << width << "\" y2=\"" << height
      << "\" stroke=\"black\"/>\n";
  for (std::size_t a = 0; a < count; ++a) {
    out << "  <g class=\"tile\" data-rep=\"" << a << "\" data-word=\"" << to_string(result.rep[a]) << "\">\n";
    for (int s = 0; s < 4; ++s) {
      out << "    <path class=\"side\" data-side=\"" << to_string(static_cast<Side>(s)) << "\"";
      if (pair_of[a][s] >= 0)
        out << " data-pair=\"" << pair_of[a][s] << "\" stroke=\"" << colour(pair_of[a][s]) << "\" stroke-width=\"2\"";
      else
        out << " stroke=\"#bbbbbb\" stroke-width=\"1\"";
      out << " fill=\"none\" d=\"" << geodesic_path(tiles[a][s], vp) << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const EnumerationResult& result) {
  std::ostringstream out;
  out << "digraph cosets {\n";
  for (std::size_t a = 0; a < result.index(); ++a)
    out << "  " << a << " [label=\"" << to_string(result.rep[a]) << "\"];\n";
  for (std::size_t a = 0; a < result.index(); ++a) {
    out << "  " << a << " -> " << result.perm_T[a] << " [label=\"T\"];\n";
    out << "  " << a << " -> " << result.perm_R[a] << " [label=\"R\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_csv(const EnumerationResult& result) {
  std::ostringstream out;
  out << "index,word,perm_T,perm_R\n";
  for (std::size_t a = 0; a < result.index(); ++a)
    out << a << ',' << to_string(result.rep[a]) << ',' << result.perm_T[a] << ',' << result.perm_R[a] << '\n';
  return out.str();
}

std::string render(const EnumerationResult& result, const PolygonParams& params, RenderFormat format) {
  switch (format) {
    case RenderFormat::svg: return render_svg(result, params);
    case RenderFormat::dot: return render_dot(result);
    case RenderFormat::csv: return render_csv(result);
  }
  return {};
}

}  // namespace veech
