#pragma once

namespace antsim {

inline constexpr const char* version = "0.1.0";

} // namespace antsim
