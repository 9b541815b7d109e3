#pragma once

namespace ncde {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ncde
