#pragma once

namespace qwell {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qwell
