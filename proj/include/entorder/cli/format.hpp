#pragma once

#include <string>

namespace entorder::cli {

// Shortest round-trip decimal form, re-rendered at 9 significant digits when
// the exact form would need more.  Zero (either sign) prints as "0".
std::string format_real(double value);

}  // namespace entorder::cli
