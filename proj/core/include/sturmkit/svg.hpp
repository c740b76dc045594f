#pragma once

#include <string>

#include "sturmkit/cell_complex.hpp"
#include "sturmkit/meander.hpp"

namespace sturmkit {

struct RenderSpec {
  int width = 900;
  int height = 420;
  bool labels = true;
};

/// Crossings on a horizontal axis with alternating semicircular arcs above
/// and below; byte-deterministic output.
std::string render_meander_svg(const Meander& m, const RenderSpec& spec = {});

/// Two-hemisphere planar layout when a decoration is present (meridians
/// highlighted down the flanks of each disk), single-disk layout otherwise.
/// Interior vertices are placed by neighbor averaging; faces at their circuit
/// barycenter.
std::string render_complex_svg(const RegularCellComplex& c,
                               const std::optional<TemplateDecoration>& d,
                               const RenderSpec& spec = {});

}  // namespace sturmkit
