#pragma once

namespace tcfa {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace tcfa
