#pragma once

#include <string_view>

namespace waerden {

inline constexpr std::string_view kSolverVersion = "waerden 0.1.0";

}  // namespace waerden
