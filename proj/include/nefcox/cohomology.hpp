#pragma once

#include "nefcox/surface.hpp"

namespace nefcox {

struct CohomologyVector {
    Int h0, h1, h2, chi;
};

enum class BaseLocusTag { Free, SinglePoint, Curve };

struct BaseLocusKind {
    BaseLocusTag tag = BaseLocusTag::Free;
    std::optional<DivisorClass> curve;  // set when tag == Curve
};

// Strip the forced negative-curve components off D. The endpoint is nef and
// carries the same h^0; an empty `subtracted` means D itself was nef.
struct Reduction {
    bool effective = false;
    DivisorClass nef_part;
    std::vector<DivisorClass> subtracted;  // in subtraction order
};
Reduction reduce_to_nef(const Surface& s, const DivisorClass& d);

bool is_effective(const Surface& s, const DivisorClass& d);

// h^1 of a nef class: zero except for multiples of -K on elliptic surfaces.
Int h1_nef(const Surface& s, const DivisorClass& d);

CohomologyVector cohomology(const Surface& s, const DivisorClass& d);

// Base-locus trichotomy of a nonzero nef class.
BaseLocusKind base_locus(const Surface& s, const DivisorClass& d);

}  // namespace nefcox
