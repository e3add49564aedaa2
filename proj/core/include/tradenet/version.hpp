#pragma once

namespace tradenet {

inline constexpr const char* kVersion = "0.1.0";

} // namespace tradenet
