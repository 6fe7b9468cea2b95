#pragma once

#include "nefcox/surface.hpp"

namespace nefcox {

// Built-in surface catalog. Elliptic entries are rank-10 Halphen surfaces
// presented in a blow-up basis; the weak del Pezzo entry uses a curve basis.
std::vector<std::string> preset_names();
SurfaceModel preset(const std::string& name);

}  // namespace nefcox
