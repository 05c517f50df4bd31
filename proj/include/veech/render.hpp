#pragma once

#include "veech/enumerate.hpp"
#include "veech/surface.hpp"

#include <string>

namespace veech {

enum class RenderFormat { svg, dot, csv };

RenderFormat parse_render_format(const std::string& text);

/// Tiles rep[a](D) in the upper half-plane. Sides glued to a side of another
/// tile that is not geometrically adjacent share a stroke colour and a
/// `data-pair` attribute; sides shared by adjacent tiles are drawn grey.
std::string render_svg(const EnumerationResult& result, const PolygonParams& params);

/// Coset graph with T and R edges.
std::string render_dot(const EnumerationResult& result);

/// `index,word,perm_T,perm_R` followed by one row per coset.
std::string render_csv(const EnumerationResult& result);

std::string render(const EnumerationResult& result, const PolygonParams& params, RenderFormat format);

}  // namespace veech
