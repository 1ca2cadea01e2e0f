// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "changeprism/change_type.hpp"
#include "changeprism/region.hpp"

namespace changeprism {

/// A colored band of one mini-map. offset and height are fractions of the
/// side's line count.
struct SpectrumLayer {
  ChangeType change_type = ChangeType::Modification;
  double offset = 0.0;
  double height = 0.0;
  std::size_t region_index = 0;
  int start_line = 1;
  int end_line = 1;

  friend bool operator==(const SpectrumLayer&, const SpectrumLayer&) = default;
};

struct Spectrum {
  int pre_line_count = 0;
  int post_line_count = 0;
  std::vector<SpectrumLayer> pre_layers;
  std::vector<SpectrumLayer> post_layers;

  const std::vector<SpectrumLayer>& layers(Side side) const noexcept {
    return side == Side::Pre ? pre_layers : post_layers;
  }
  int line_count(Side side) const noexcept {
    return side == Side::Pre ? pre_line_count : post_line_count;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// One layer per region, offset = (start - 1) / n, height = (end - start + 1) / n,
/// sorted by (layer order, offset). Throws Error(RegionOutOfBounds).
Spectrum build_spectrum(int pre_line_count, int post_line_count,
                        std::span<const ChangeRegion> regions);

/// Per line of the side (index 0 is line 1): the enabled covering layer
/// with the largest layer order, or nullopt.
std::vector<std::optional<ChangeType>> resolve_visible(const Spectrum& spectrum,
                                                       const TypeSet& enabled, Side side);

/// Key-based variant; throws Error(UnknownTypeKey).
std::vector<std::optional<ChangeType>> resolve_visible(const Spectrum& spectrum,
                                                       std::span<const std::string> enabled_keys,
                                                       Side side);

/// Keeps only the layers whose type is enabled.
Spectrum filter_spectrum(const Spectrum& spectrum, const TypeSet& enabled);

}  // namespace changeprism
