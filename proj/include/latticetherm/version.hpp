#pragma once

namespace ltherm {

inline constexpr const char* kVersion = "0.1.0";

}
