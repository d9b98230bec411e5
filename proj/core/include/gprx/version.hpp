#pragma once

namespace gprx {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gprx
