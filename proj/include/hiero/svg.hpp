#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiero/hieroglyph.hpp"

namespace hiero {

// Chord-diagram picture: a circle with 2n labeled attachment arcs in word
// order and one ribbon per letter; twisted ribbons are dashed and marked.
// Output is deterministic for a fixed input.
std::string render_svg(const Hieroglyph& h,
                       const std::optional<std::vector<uint8_t>>& twists = std::nullopt);

}  // namespace hiero
