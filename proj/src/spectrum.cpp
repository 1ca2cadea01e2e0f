// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/spectrum.hpp"

#include <algorithm>
#include <tuple>

#include "changeprism/error.hpp"

namespace changeprism {

namespace {

void sort_layers(std::vector<SpectrumLayer>& layers) {
  std::sort(layers.begin(), layers.end(), [](const SpectrumLayer& a, const SpectrumLayer& b) {
    return std::tuple(layer_order(a.change_type), a.offset, a.height, a.region_index) <
           std::tuple(layer_order(b.change_type), b.offset, b.height, b.region_index);
  });
}

}  // namespace

Spectrum build_spectrum(int pre_line_count, int post_line_count,
                        std::span<const ChangeRegion> regions) {
  if (pre_line_count < 0 || post_line_count < 0) {
    throw Error(ErrorCode::RegionOutOfBounds, "negative line count");
  }
  Spectrum spectrum;
  spectrum.pre_line_count = pre_line_count;
  spectrum.post_line_count = post_line_count;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto& region = regions[i];
    const int count = region.side == Side::Pre ? pre_line_count : post_line_count;
    if (region.start_line < 1 || region.end_line < region.start_line || region.end_line > count) {
      throw Error(ErrorCode::RegionOutOfBounds,
                  "region " + std::to_string(i) + " (" + std::string(side_name(region.side)) + " " +
                      std::to_string(region.start_line) + "-" + std::to_string(region.end_line) +
                      ") outside 1.." + std::to_string(count));
    }
    SpectrumLayer layer;
    layer.change_type = region.change_type;
    layer.offset = static_cast<double>(region.start_line - 1) / count;
    layer.height = static_cast<double>(region.end_line - region.start_line + 1) / count;
    layer.region_index = i;
    layer.start_line = region.start_line;
    layer.end_line = region.end_line;
    (region.side == Side::Pre ? spectrum.pre_layers : spectrum.post_layers).push_back(layer);
  }
  sort_layers(spectrum.pre_layers);
  sort_layers(spectrum.post_layers);
  return spectrum;
}

std::vector<std::optional<ChangeType>> resolve_visible(const Spectrum& spectrum,
                                                       const TypeSet& enabled, Side side) {
  const int count = spectrum.line_count(side);
  std::vector<std::optional<ChangeType>> visible(static_cast<std::size_t>(count));
  // Layers are sorted by layer order, so later writes paint on top.
  for (const auto& layer : spectrum.layers(side)) {
    if (!enabled.contains(layer.change_type)) continue;
    for (int line = std::max(layer.start_line, 1); line <= std::min(layer.end_line, count); ++line) {
      auto& slot = visible[line - 1];
      if (!slot || layer_order(*slot) < layer_order(layer.change_type)) slot = layer.change_type;
    }
  }
  return visible;
}

std::vector<std::optional<ChangeType>> resolve_visible(const Spectrum& spectrum,
                                                       std::span<const std::string> enabled_keys,
                                                       Side side) {
  return resolve_visible(spectrum, parse_type_keys(enabled_keys), side);
}

Spectrum filter_spectrum(const Spectrum& spectrum, const TypeSet& enabled) {
  Spectrum out;
  out.pre_line_count = spectrum.pre_line_count;
  out.post_line_count = spectrum.post_line_count;
  for (const auto& layer : spectrum.pre_layers) {
    if (enabled.contains(layer.change_type)) out.pre_layers.push_back(layer);
  }
  for (const auto& layer : spectrum.post_layers) {
    if (enabled.contains(layer.change_type)) out.post_layers.push_back(layer);
  }
  return out;
}

}  // namespace changeprism
