#ifndef DINING_RENDER_HPP
#define DINING_RENDER_HPP

#include <iosfwd>
#include <span>

#include "dining/room.hpp"
#include "dining/seating.hpp"

namespace dining {

struct SvgStyle {
  double pixels_per_block = 40.0;
  double margin_px = 20.0;
};

/// Static plan of a layout: grid, missing blocks, soft obstacles (gray
/// fills), walls (dashed strokes), one `class="table"` rectangle per selected
/// configuration and one `class="chair"` arrow per seat. Output is a pure
/// function of the inputs. Throws std::out_of_range on an unknown id.
void render_svg(const Room& room, std::span<const SittingConfiguration> configs,
                std::span<const int> selected, std::ostream& out, const SvgStyle& style = {});

}  // namespace dining

#endif  // DINING_RENDER_HPP
