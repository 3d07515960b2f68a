#pragma once

namespace netft {

inline constexpr const char* version_string = "netft 0.1.0";

} // namespace netft
