#pragma once

namespace extq {

inline constexpr const char* kVersion = "0.1.0";

} // namespace extq
