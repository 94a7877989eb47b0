#pragma once

namespace decostab {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace decostab
