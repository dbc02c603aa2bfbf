#pragma once

namespace gauram {

// Version stamp carried by CSV manifests and JSON reports.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace gauram
