#pragma once

namespace pxc {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kUserAgent = "pxc/0.1.0 (product classification toolkit)";

}  // namespace pxc
