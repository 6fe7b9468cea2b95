#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "nefcox/cones.hpp"
#include "nefcox/lattice.hpp"

namespace nefcox {

enum class SurfaceKind { WeakDelPezzo, Elliptic };

struct SurfaceModel {
    PicardLattice lattice;
    SurfaceKind kind = SurfaceKind::Elliptic;
    int index = 1;  // Halphen index m; meaningful for elliptic kind only
    std::vector<DivisorClass> minus_two;
    // nullopt: to be enumerated. A supplied list is trusted as complete.
    std::optional<std::vector<DivisorClass>> minus_one;
    std::string name;
};

// Connected groups of the (-2)-curve intersection graph, with the fiber
// multiplicities when the group sums to -cK (c = 1 or m).
struct FiberGroup {
    std::vector<std::size_t> members;  // indices into minus_two
    bool full_fiber = false;
    int canonical_multiple = 0;  // c with sum(mult_i * G_i) = -cK
    std::vector<Int> multiplicities;
};
struct FiberStructure {
    std::vector<FiberGroup> components;
};

std::vector<std::string> validate_model(const SurfaceModel& m);

// Immutable surface with lazily computed derived data. Derived getters are
// thread-safe; results are cached once per surface.
class Surface {
public:
    explicit Surface(SurfaceModel model, int jobs = 0);
    Surface(Surface&&) noexcept;
    Surface& operator=(Surface&&) noexcept;
    ~Surface();

    const SurfaceModel& model() const { return model_; }
    const PicardLattice& lattice() const { return model_.lattice; }
    SurfaceKind kind() const { return model_.kind; }
    int index() const { return model_.index; }
    const std::string& name() const { return model_.name; }
    int jobs() const { return jobs_; }

    Int pair(const DivisorClass& a, const DivisorClass& b) const {
        return pairing(model_.lattice, a, b);
    }
    DivisorClass minus_k() const {
        return model_.lattice.cls(negate(model_.lattice.canonical.coords));
    }
    Int k_squared() const {
        return self_intersection(model_.lattice, model_.lattice.canonical);
    }

    const std::vector<DivisorClass>& minus_two() const { return model_.minus_two; }
    const std::vector<DivisorClass>& minus_one() const;        // enumerates if needed
    const std::vector<DivisorClass>& negative_curves() const;  // sorted union
    const RationalCone& nef() const;
    const std::vector<Vec>& nef_hilbert_basis() const;
    // A class strictly positive against every negative curve (sum of nef rays).
    const DivisorClass& ample_class() const;
    const FiberStructure& fibers() const;  // elliptic only
    bool anticanonical_irreducible() const;

    bool is_nef(const DivisorClass& d) const;
    bool is_ample(const DivisorClass& d) const;

    // Cohomology memoization, shared across workers.
    bool cache_lookup(const Vec& key, std::array<Int, 4>& out) const;
    void cache_store(const Vec& key, const std::array<Int, 4>& val) const;

private:
    SurfaceModel model_;
    int jobs_;
    struct Caches;
    std::unique_ptr<Caches> caches_;
};

// All classes E with E^2 = -1, K.E = -1 and E.G >= 0 for every listed
// (-2)-curve. Certified complete: short-vector enumeration in the negative
// definite K-perp for weak del Pezzo surfaces, fiber-profile sweep for
// extremal elliptic surfaces.
std::vector<DivisorClass> enumerate_minus_one(const Surface& s);

// Twin kernels behind the elliptic sweep; outputs are identical.
std::vector<DivisorClass> minus_one_from_profiles_serial(
    const Surface& s, const std::vector<Vec>& profiles);
std::vector<DivisorClass> minus_one_from_profiles_parallel(
    const Surface& s, const std::vector<Vec>& profiles, int jobs);

// The admissible pairing profiles against minus_two (elliptic extremal case).
std::vector<Vec> minus_one_profiles(const Surface& s);

FiberStructure fiber_structure(const Surface& s);
bool anticanonical_irreducible(const Surface& s);

// Blow-down of a listed (-1)-curve. Returned surface lives in an integral
// basis of E-perp; `pushforward` maps old classes, `pullback` embeds new
// classes back into the old lattice.
struct Contraction {
    Surface surface;
    Mat basis;     // columns: new basis in old coordinates
    Mat push_map;  // new coords of C + (C.E)E
    int old_lattice_id = 0;
    DivisorClass pushforward(const PicardLattice& old_lattice,
                             const DivisorClass& c) const;
    Vec pullback_coords(const DivisorClass& c) const;  // old-basis coordinates
};
Contraction contract(const Surface& s, const DivisorClass& e);

}  // namespace nefcox
