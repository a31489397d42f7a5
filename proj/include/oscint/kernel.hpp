#pragma once

#include <string_view>

namespace oscint {

/// Oscillatory factor of a Fourier sine or cosine transform.
enum class Kernel { Sin, Cos };

constexpr std::string_view to_string(Kernel k) { return k == Kernel::Sin ? "sin" : "cos"; }

} // namespace oscint
