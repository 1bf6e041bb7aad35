#pragma once

#include <string>

#include "ncycle/embedding.hpp"

namespace ncycle {

struct RenderOptions {
  int width = 512;
  int height = 512;
  bool label_corners = true;
  bool highlight_splitters = false;
  /// Even-odd fill of the closed cycle. Illustrative only: it does not
  /// shade every bounded face of a self-intersecting cycle.
  bool shade_regions = false;
  std::string stroke = "#222222";
  std::string splitter_stroke = "#d62728";
  std::string fill = "#9ecae1";
  std::string corner_fill = "#ffffff";
};

/// SVG 1.1 document with one <line> per segment in cycle order and one
/// <circle> per corner. World y is flipped so the picture reads with y up.
/// Throws std::invalid_argument for non-positive width or height.
std::string to_svg(const CycleEmbedding& emb, const RenderOptions& opts = {});

}  // namespace ncycle
