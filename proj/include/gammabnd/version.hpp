#pragma once

namespace gammabnd {

inline constexpr const char* kVersionString = "0.1.0";

}  // namespace gammabnd
