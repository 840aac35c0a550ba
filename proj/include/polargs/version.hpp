#pragma once

namespace polargs {

inline constexpr const char* version = "0.1.0";

}
