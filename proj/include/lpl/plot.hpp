#pragma once

// Timeline rendering of frame labels as SVG colour bands.

#include <filesystem>
#include <span>
#include <string>

namespace lpl::harness {

/// "#rrggbb" for a class id: golden-angle hue steps at fixed saturation and value.
std::string class_color(int class_id);

/// Ground truth band above the prediction band. Throws on unequal lengths.
std::string timeline_svg(std::span<const int> pred, std::span<const int> gt);
void plot_timeline(std::span<const int> pred, std::span<const int> gt,
                   const std::filesystem::path& out);

}  // namespace lpl::harness
