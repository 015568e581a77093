#pragma once

namespace spinboost {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spinboost
