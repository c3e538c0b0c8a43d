#pragma once

namespace trnplan {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace trnplan
