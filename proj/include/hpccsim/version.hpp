#pragma once

namespace hpccsim {

inline constexpr const char* kSuiteVersion = "1.0.0";

} // namespace hpccsim
