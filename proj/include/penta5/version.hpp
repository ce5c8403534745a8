#pragma once

namespace penta5 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace penta5
