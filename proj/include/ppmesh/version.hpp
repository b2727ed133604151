#pragma once

namespace ppmesh {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "ppmesh-report/1";

}  // namespace ppmesh
