#pragma once

namespace wiremodel {

inline constexpr const char* kVersion = "0.1.0";

} // namespace wiremodel
