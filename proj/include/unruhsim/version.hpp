#pragma once

namespace unruhsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace unruhsim
