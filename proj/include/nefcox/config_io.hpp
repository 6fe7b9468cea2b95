#pragma once

#include <json.hpp>

#include "nefcox/coxdeg.hpp"

namespace nefcox {

using Json = nlohmann::ordered_json;

// Surface-config schema: name, rank, basis_labels, gram (omitted => blow-up
// form diag(1,-1,...,-1) with canonical -3H + sum Ei), canonical, kind
// ("weak_del_pezzo" | "elliptic") with index, minus_two, optional minus_one.
SurfaceModel surface_from_json(const Json& j);
SurfaceModel load_surface_config(const std::string& path);
Json surface_to_json(const SurfaceModel& m);

Json class_to_json(const DivisorClass& c);
Json report_to_json(const Report& r);
std::string report_to_tsv(const Report& r);
std::string report_to_text(const Report& r);

// DOT graph of the negative curves: filled boxes for (-2)-curves, circles
// for (-1)-curves, one edge per positive intersection.
std::string emit_dot(const Surface& s);

}  // namespace nefcox
