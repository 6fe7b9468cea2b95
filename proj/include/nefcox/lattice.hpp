#pragma once

#include <string>
#include <vector>

#include "nefcox/linalg.hpp"

namespace nefcox {

// A divisor class is a coordinate vector in a declared basis of the Picard
// lattice. The basis tag guards against mixing coordinates across lattices.
struct DivisorClass {
    Vec coords;
    int basis_id = 0;

    bool operator==(const DivisorClass& o) const {
        return basis_id == o.basis_id && coords == o.coords;
    }
    bool operator<(const DivisorClass& o) const {
        if (basis_id != o.basis_id) return basis_id < o.basis_id;
        return coords < o.coords;
    }
};

struct PicardLattice {
    int id = 0;
    std::size_t rank = 0;
    Mat gram;                          // symmetric, unimodular
    DivisorClass canonical;            // the class K
    std::vector<std::string> basis_labels;

    DivisorClass cls(Vec coords) const;
    DivisorClass cls(std::initializer_list<long long> coords) const;
    DivisorClass zero() const { return cls(Vec(rank, 0)); }
};

int next_lattice_id();

// Pic of a blow-up of P^2 in n points: diag(1,-1,...,-1), K = -3H + sum Ei.
PicardLattice blowup_lattice(std::size_t points,
                             std::vector<std::string> labels = {});

PicardLattice make_lattice(Mat gram, Vec canonical,
                           std::vector<std::string> labels = {});

struct RRData {
    Int chi;
    Int genus;
};

Int pairing(const PicardLattice& l, const DivisorClass& a, const DivisorClass& b);
Int self_intersection(const PicardLattice& l, const DivisorClass& a);
RRData riemann_roch(const PicardLattice& l, const DivisorClass& d);

// Every failed check is reported; an empty list means the lattice is valid.
std::vector<std::string> validate_lattice(const PicardLattice& l);

// New lattice whose basis vectors are the columns of `change` written in the
// old basis; `change` must be unimodular. Old coordinates transform by the
// inverse of `change`.
struct BasisChange {
    PicardLattice lattice;
    Mat old_to_new;  // inverse of the change matrix
    DivisorClass transform(const PicardLattice& old_lattice,
                           const DivisorClass& c) const;
};
BasisChange change_basis(const PicardLattice& l, const Mat& change,
                         std::vector<std::string> labels = {});

}  // namespace nefcox
