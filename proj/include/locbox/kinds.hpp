#pragma once

#include <string>
#include <string_view>

namespace locbox {

// Probability-map families emitted by a localization model.
enum class MapKind { kInOut, kBorders, kCombined };

// Localizer arms of the detection pipeline.
enum class LocalizerKind { kInOut, kBorders, kCombined, kRegression, kNone };

inline bool has_inout(MapKind k) { return k == MapKind::kInOut || k == MapKind::kCombined; }
inline bool has_borders(MapKind k) { return k == MapKind::kBorders || k == MapKind::kCombined; }

std::string to_string(MapKind k);
std::string to_string(LocalizerKind k);
MapKind map_kind_from_string(std::string_view s);
LocalizerKind localizer_kind_from_string(std::string_view s);

// Probability-map kind of a localizer arm; throws for regression/none.
MapKind map_kind_of(LocalizerKind k);

}  // namespace locbox
