#pragma once

namespace cayley {

inline constexpr const char* kVersion = "0.1.0";

}
