#pragma once

#include <string>

#include "lgk/json_io.hpp"

namespace lgk::io {

/// Plain-text rendering of a JSON result: one "path: value" row per leaf,
/// with a few summary lines for cohomology targets.
std::string format_table(const json& j, bool color);

/// "1 class" / "n classes".
std::string class_count_text(const Int& n);

/// "Z/2 + Z^1" style name of a group given by free rank and invariant factors.
std::string group_text(const json& target);

}  // namespace lgk::io
