#pragma once

namespace cubicpm {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "cubicpm/1";

}  // namespace cubicpm
