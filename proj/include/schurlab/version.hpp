#pragma once

namespace schurlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace schurlab
