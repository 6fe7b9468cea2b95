#pragma once

#include <optional>

#include "nefcox/linalg.hpp"

namespace nefcox {

class Surface;

// Extremal rays and lineality space of {x : c.x >= 0 for all ineqs,
// e.x == 0 for all eqs}, computed by exact double description.
struct DualDescription {
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
};
DualDescription dual_description(std::size_t ambient, const std::vector<Vec>& ineqs,
                                 const std::vector<Vec>& eqs = {});

// Pointed-or-not rational polyhedral cone carrying both descriptions.
// Constructors canonicalize: rays are primitive, extremal and sorted;
// facets likewise (as the extremal rays of the dual).
struct RationalCone {
    std::size_t ambient = 0;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
    std::vector<Vec> facets;
    std::vector<Vec> equations;

    bool pointed() const { return lineality.empty(); }
    std::size_t dim() const;
    bool contains(const Vec& v) const;
};

RationalCone cone_from_generators(std::size_t ambient, const std::vector<Vec>& gens);
RationalCone cone_from_facets(std::size_t ambient, const std::vector<Vec>& ineqs);

// Dual with respect to a symmetric pairing: {v : v^T G g >= 0 for all
// generators g}. Non-pointed duals are legal output.
RationalCone dual_cone(const RationalCone& c, const Mat& gram);

// Deterministic pulling triangulation of the cone spanned by `rays`
// (full-dimensional, pointed). Each simplex is a list of ray indices.
std::vector<std::vector<int>> pull_triangulation(std::size_t ambient,
                                                 const std::vector<Vec>& rays,
                                                 const std::vector<Vec>* facets = nullptr);

// Lattice points of the half-open fundamental parallelepiped of a full-rank
// simplex (columns of `rays_as_cols`), excluding the origin.
std::vector<Vec> parallelepiped_points(const Mat& rays_as_cols);

// Candidate generators of the monoid C cap Z^n: primitive ray generators
// plus the parallelepiped points over a triangulation that survive a
// ray-subtraction reducibility filter. Twin kernels: the parallel one
// distributes simplices over OpenMP threads and merges deterministically;
// outputs are identical.
std::vector<Vec> hilbert_candidates_serial(const RationalCone& c,
                                           const std::vector<std::vector<int>>& tri);
std::vector<Vec> hilbert_candidates_parallel(const RationalCone& c,
                                             const std::vector<std::vector<int>>& tri,
                                             int jobs);

struct HilbertBasisResult {
    std::vector<Vec> elements;  // sorted lex
};

// Minimal generating set of C cap Z^n. C must be pointed and
// full-dimensional. jobs: 1 = serial kernels, 0 = library default.
HilbertBasisResult hilbert_basis(const RationalCone& c, int jobs = 0);

// Exact nonnegative-integer feasibility v = sum a_i g_i with one certificate.
struct MonoidCertificate {
    bool member = false;
    Vec multipliers;  // in the order of gens, empty when !member
};
MonoidCertificate monoid_member(const std::vector<Vec>& gens, const Vec& v);

// Nef(X): dual of the cone of negative curves w.r.t. the intersection form.
RationalCone nef_cone(const Surface& s);

}  // namespace nefcox
