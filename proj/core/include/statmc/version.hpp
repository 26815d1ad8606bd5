#pragma once

namespace statmc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace statmc
