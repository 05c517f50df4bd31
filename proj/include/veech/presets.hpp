#pragma once

#include "veech/covers.hpp"

#include <string>
#include <vector>

namespace veech {

/// Cover specs for the standard examples. Parameterized names take the form
/// `family:k`, e.g. `fig14:5` or `trivial:6`. Throws Error(invalid_argument)
/// for unknown names.
CoverSpec preset(const std::string& name);

/// The fixed catalog, in a stable order.
std::vector<std::string> preset_names();

/// `fig14:5` -> `fig14_d5`, `trivial:6` -> `trivial_n6`, `fig6` -> `fig6`.
std::string preset_file_stem(const std::string& name);

}  // namespace veech
