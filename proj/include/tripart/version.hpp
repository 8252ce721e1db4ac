#pragma once

namespace tripart {
inline constexpr const char* kToolVersion = "0.3.0";
}
