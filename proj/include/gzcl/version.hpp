#pragma once

namespace gzcl {

inline constexpr const char* kVersion = "1.0.0";
/// Bumped whenever the layout of cached JSON documents changes.
inline constexpr int kCacheSchemaVersion = 1;

}  // namespace gzcl
