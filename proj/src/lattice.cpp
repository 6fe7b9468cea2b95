#include "nefcox/lattice.hpp"

#include <atomic>

namespace nefcox {

int next_lattice_id() {
    static std::atomic<int> counter{1};
    return counter.fetch_add(1);
}

DivisorClass PicardLattice::cls(Vec coords) const {
    if (coords.size() != rank)
        throw Error("class has " + std::to_string(coords.size()) +
                    " coordinates, lattice rank is " + std::to_string(rank));
    return DivisorClass{std::move(coords), id};
}

DivisorClass PicardLattice::cls(std::initializer_list<long long> coords) const {
    Vec v;
    v.reserve(coords.size());
    for (long long c : coords) v.emplace_back(c);
    return cls(std::move(v));
}

PicardLattice blowup_lattice(std::size_t points, std::vector<std::string> labels) {
    std::size_t n = points + 1;
    Mat gram(n, Vec(n, 0));
    gram[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) gram[i][i] = -1;
    Vec k(n, 1);
    k[0] = -3;
    if (labels.empty()) {
        labels.push_back("H");
        for (std::size_t i = 1; i < n; ++i) labels.push_back("E" + std::to_string(i));
    }
    return make_lattice(std::move(gram), std::move(k), std::move(labels));
}

PicardLattice make_lattice(Mat gram, Vec canonical, std::vector<std::string> labels) {
    PicardLattice l;
    l.id = next_lattice_id();
    l.rank = gram.size();
    l.gram = std::move(gram);
    if (labels.empty())
        for (std::size_t i = 0; i < l.rank; ++i) labels.push_back("b" + std::to_string(i));
    l.basis_labels = std::move(labels);
    l.canonical = DivisorClass{std::move(canonical), l.id};
    if (l.canonical.coords.size() != l.rank)
        throw Error("canonical class length does not match lattice rank");
    return l;
}

static void check_same_lattice(const PicardLattice& l, const DivisorClass& a) {
    if (a.basis_id != l.id)
        throw Error("divisor class does not refer to this lattice");
    if (a.coords.size() != l.rank)
        throw Error("divisor class dimension mismatch");
}

Int pairing(const PicardLattice& l, const DivisorClass& a, const DivisorClass& b) {
    check_same_lattice(l, a);
    check_same_lattice(l, b);
    Int s = 0;
    for (std::size_t i = 0; i < l.rank; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < l.rank; ++j) {
            if (l.gram[i][j] == 0 || b.coords[j] == 0) continue;
            s += a.coords[i] * l.gram[i][j] * b.coords[j];
        }
    }
    return s;
}

Int self_intersection(const PicardLattice& l, const DivisorClass& a) {
    return pairing(l, a, a);
}

RRData riemann_roch(const PicardLattice& l, const DivisorClass& d) {
    Int d2 = self_intersection(l, d);
    Int dk = pairing(l, d, l.canonical);
    if ((d2 - dk) % 2 != 0)
        throw Error("Riemann-Roch parity violation: D^2 - D.K is odd");
    return RRData{1 + (d2 - dk) / 2, 1 + (d2 + dk) / 2};
}

std::vector<std::string> validate_lattice(const PicardLattice& l) {
    std::vector<std::string> issues;
    if (l.gram.size() != l.rank) {
        issues.push_back("gram size does not match rank");
        return issues;
    }
    for (std::size_t i = 0; i < l.rank; ++i) {
        if (l.gram[i].size() != l.rank) {
            issues.push_back("gram row " + std::to_string(i) + " has wrong length");
            return issues;
        }
    }
    for (std::size_t i = 0; i < l.rank; ++i)
        for (std::size_t j = i + 1; j < l.rank; ++j)
            if (l.gram[i][j] != l.gram[j][i])
                issues.push_back("gram not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    if (!issues.empty()) return issues;

    Int d = det(l.gram);
    if (d != 1 && d != -1)
        issues.push_back("lattice not unimodular: det = " + d.str());

    Inertia sig = symmetric_inertia(l.gram);
    if (!(sig.pos == 1 && sig.zero == 0 && sig.neg == int(l.rank) - 1))
        issues.push_back("signature is (" + std::to_string(sig.pos) + "," +
                         std::to_string(sig.neg) + "), expected (1," +
                         std::to_string(l.rank - 1) + ")");

    // Adjunction parity: C^2 + C.K even for every basis class.
    for (std::size_t i = 0; i < l.rank; ++i) {
        Int c2 = l.gram[i][i];
        Int ck = dot(l.gram[i], l.canonical.coords);
        if ((c2 + ck) % 2 != 0)
            issues.push_back("basis class " + l.basis_labels[i] +
                             " violates adjunction parity");
    }
    return issues;
}

DivisorClass BasisChange::transform(const PicardLattice& old_lattice,
                                    const DivisorClass& c) const {
    if (c.basis_id != old_lattice.id)
        throw Error("transform: class not in the source lattice");
    return lattice.cls(mat_vec(old_to_new, c.coords));
}

BasisChange change_basis(const PicardLattice& l, const Mat& change,
                         std::vector<std::string> labels) {
    if (change.size() != l.rank)
        throw Error("change_basis: matrix size mismatch");
    Int d = det(change);
    if (d != 1 && d != -1)
        throw Error("change_basis: matrix not unimodular (det = " + d.str() + ")");
    Mat inv = unimodular_inverse(change);
    // new gram = C^T G C; new coordinates of x are C^{-1} x.
    Mat new_gram = mat_mul(mat_mul(transpose(change), l.gram), change);
    Vec new_k = mat_vec(inv, l.canonical.coords);
    BasisChange bc{make_lattice(std::move(new_gram), std::move(new_k), std::move(labels)),
                   std::move(inv)};
    return bc;
}

}  // namespace nefcox
