#pragma once

namespace netcurv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace netcurv
