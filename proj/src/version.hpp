#pragma once

namespace chiralswitch {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chiralswitch
