#pragma once

namespace betti {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace betti
