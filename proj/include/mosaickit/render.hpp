#pragma once

#include "mosaickit/mosaic.hpp"

#include <string>

namespace mosaickit {

enum class RenderFormat { ascii, svg };

/// Deterministic drawing. ASCII uses a 5x3 character block per tile; SVG uses
/// 40x40 unit cells with each crossing drawn as a `<g class="crossing">` group
/// whose under strand is broken around the over strand.
std::string render(const Mosaic& m, RenderFormat format);

std::string render_ascii(const Mosaic& m);
std::string render_svg(const Mosaic& m);

}  // namespace mosaickit
