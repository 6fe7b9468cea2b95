#include "nefcox/surface.hpp"

#include <algorithm>
#include <functional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nefcox {

std::vector<std::string> validate_model(const SurfaceModel& m) {
    std::vector<std::string> issues = validate_lattice(m.lattice);
    const auto& l = m.lattice;
    auto label = [&](const DivisorClass& c) { return "(" + to_string(c.coords) + ")"; };

    Int k2 = self_intersection(l, l.canonical);
    if (m.kind == SurfaceKind::Elliptic && k2 != 0)
        issues.push_back("elliptic surface requires K^2 = 0, got " + k2.str());
    if (m.kind == SurfaceKind::WeakDelPezzo && k2 <= 0)
        issues.push_back("weak del Pezzo requires K^2 > 0, got " + k2.str());
    if (m.kind == SurfaceKind::Elliptic && m.index < 1)
        issues.push_back("elliptic index must be >= 1");

    for (const auto& c : m.minus_two) {
        if (self_intersection(l, c) != -2)
            issues.push_back("listed (-2)-class " + label(c) + " has square " +
                             self_intersection(l, c).str());
        if (pairing(l, c, l.canonical) != 0)
            issues.push_back("listed (-2)-class " + label(c) + " has K.C = " +
                             pairing(l, c, l.canonical).str());
    }
    if (m.minus_one) {
        for (const auto& e : *m.minus_one) {
            if (self_intersection(l, e) != -1)
                issues.push_back("listed (-1)-class " + label(e) + " has square " +
                                 self_intersection(l, e).str());
            if (pairing(l, e, l.canonical) != -1)
                issues.push_back("listed (-1)-class " + label(e) + " has K.E = " +
                                 pairing(l, e, l.canonical).str());
        }
    }
    std::vector<DivisorClass> all = m.minus_two;
    if (m.minus_one) all.insert(all.end(), m.minus_one->begin(), m.minus_one->end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i] == all[j]) {
                issues.push_back("duplicate curve class " + label(all[i]));
                continue;
            }
            if (pairing(l, all[i], all[j]) < 0)
                issues.push_back("curves " + label(all[i]) + " and " + label(all[j]) +
                                 " have negative intersection");
        }
    return issues;
}

struct Surface::Caches {
    std::recursive_mutex mu;
    bool have_minus_one = false;
    std::vector<DivisorClass> minus_one;
    bool have_negatives = false;
    std::vector<DivisorClass> negatives;
    bool have_nef = false;
    RationalCone nef;
    bool have_hb = false;
    std::vector<Vec> hb;
    bool have_ample = false;
    DivisorClass ample;
    bool have_fibers = false;
    FiberStructure fibers;
    bool have_irr = false;
    bool irr = false;

    std::mutex coh_mu;
    std::map<Vec, std::array<Int, 4>> coh;
};

Surface::Surface(SurfaceModel model, int jobs)
    : model_(std::move(model)), jobs_(jobs), caches_(std::make_unique<Caches>()) {}

Surface::Surface(Surface&&) noexcept = default;
Surface& Surface::operator=(Surface&&) noexcept = default;
Surface::~Surface() = default;

const std::vector<DivisorClass>& Surface::minus_one() const {
    std::lock_guard lk(caches_->mu);
    if (!caches_->have_minus_one) {
        if (model_.minus_one) {
            caches_->minus_one = *model_.minus_one;
            std::sort(caches_->minus_one.begin(), caches_->minus_one.end());
        } else {
            caches_->minus_one = enumerate_minus_one(*this);
        }
        caches_->have_minus_one = true;
    }
    return caches_->minus_one;
}

const std::vector<DivisorClass>& Surface::negative_curves() const {
    std::lock_guard lk(caches_->mu);
    if (!caches_->have_negatives) {
        std::vector<DivisorClass> all = model_.minus_two;
        const auto& m1 = minus_one();
        all.insert(all.end(), m1.begin(), m1.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        caches_->negatives = std::move(all);
        caches_->have_negatives = true;
    }
    return caches_->negatives;
}

const RationalCone& Surface::nef() const {
    std::lock_guard lk(caches_->mu);
    if (!caches_->have_nef) {
        caches_->nef = nef_cone(*this);
        caches_->have_nef = true;
    }
    return caches_->nef;
}

const std::vector<Vec>& Surface::nef_hilbert_basis() const {
    std::lock_guard lk(caches_->mu);
    if (!caches_->have_hb) {
        caches_->hb = hilbert_basis(nef(), jobs_).elements;
        caches_->have_hb = true;
    }
    return caches_->hb;
}

const DivisorClass& Surface::ample_class() const {
    std::lock_guard lk(caches_->mu);
    if (!caches_->have_ample) {
        Vec a(lattice().rank, 0);
        for (const Vec& r : nef().rays) a = add(a, r);
        caches_->ample = lattice().cls(std::move(a));
        caches_->have_ample = true;
    }
    return caches_->ample;
}

const FiberStructure& Surface::fibers() const {
    std::lock_guard lk(caches_->mu);
    if (!caches_->have_fibers) {
        caches_->fibers = fiber_structure(*this);
        caches_->have_fibers = true;
    }
    return caches_->fibers;
}

bool Surface::anticanonical_irreducible() const {
    std::lock_guard lk(caches_->mu);
    if (!caches_->have_irr) {
        caches_->irr = nefcox::anticanonical_irreducible(*this);
        caches_->have_irr = true;
    }
    return caches_->irr;
}

bool Surface::is_nef(const DivisorClass& d) const {
    for (const auto& c : negative_curves())
        if (pair(d, c) < 0) return false;
    return true;
}

bool Surface::is_ample(const DivisorClass& d) const {
    if (self_intersection(lattice(), d) <= 0) return false;
    for (const auto& c : negative_curves())
        if (pair(d, c) <= 0) return false;
    return true;
}

bool Surface::cache_lookup(const Vec& key, std::array<Int, 4>& out) const {
    std::lock_guard lk(caches_->coh_mu);
    auto it = caches_->coh.find(key);
    if (it == caches_->coh.end()) return false;
    out = it->second;
    return true;
}

void Surface::cache_store(const Vec& key, const std::array<Int, 4>& val) const {
    std::lock_guard lk(caches_->coh_mu);
    caches_->coh.emplace(key, val);
}

FiberStructure fiber_structure(const Surface& s) {
    if (s.kind() != SurfaceKind::Elliptic)
        throw Error("fiber_structure: surface is not elliptic");
    const auto& g = s.minus_two();
    std::size_t n = g.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s.pair(g[i], g[j]) > 0) parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

    FiberStructure out;
    for (auto& [root, members] : groups) {
        FiberGroup fg;
        fg.members = members;
        std::vector<Vec> gens;
        for (std::size_t i : members) gens.push_back(g[i].coords);
        std::vector<int> cs = s.index() == 1 ? std::vector<int>{1}
                                             : std::vector<int>{1, s.index()};
        for (int c : cs) {
            Vec target = scale(-c, s.lattice().canonical.coords);
            auto cert = monoid_member(gens, target);
            if (cert.member &&
                std::all_of(cert.multipliers.begin(), cert.multipliers.end(),
                            [](const Int& x) { return x >= 1; })) {
                fg.full_fiber = true;
                fg.canonical_multiple = c;
                fg.multiplicities = cert.multipliers;
                break;
            }
        }
        out.components.push_back(std::move(fg));
    }
    return out;
}

bool anticanonical_irreducible(const Surface& s) {
    if (s.kind() != SurfaceKind::Elliptic)
        throw Error("anticanonical_irreducible: surface is not elliptic");
    DivisorClass mk = s.minus_k();
    for (const auto& c : s.minus_two())
        if (c == mk) return false;  // cannot happen when K^2 = 0; kept as a guard
    std::vector<Vec> gens;
    for (const auto& c : s.minus_two()) gens.push_back(c.coords);
    if (gens.empty()) return true;
    return !monoid_member(gens, mk.coords).member;
}

// ---------------------------------------------------------------------------
// (-1)-curve enumeration

namespace {

// All integer vectors y with y^T P y == target; P positive definite rational.
void vectors_of_norm(const std::vector<std::vector<Rat>>& p, const Int& target,
                     std::vector<Vec>& out) {
    std::size_t n = p.size();
    if (n == 0) return;
    // Q(y) = sum_i d[i] * (y_i + sum_{j>i} u[i][j] y_j)^2
    std::vector<std::vector<Rat>> q = p;
    std::vector<Rat> d(n);
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = q[i][i];
        if (d[i] <= 0) throw Error("vectors_of_norm: form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) u[i][j] = q[i][j] / d[i];
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= d[i] * u[i][k] * u[i][l];
    }
    Vec y(n, 0);
    // enumerate from the last coordinate down
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t lvl, Rat rem) {
        std::size_t i = lvl - 1;
        Rat c(0);
        for (std::size_t j = i + 1; j < n; ++j)
            if (y[j] != 0) c += u[i][j] * Rat(y[j]);
        Rat s2 = rem / d[i];
        // |t + c| <= sqrt(s2): exact integer interval
        Int a = boost::multiprecision::numerator(s2);
        Int b = boost::multiprecision::denominator(s2);
        Rat up = Rat(isqrt(a * b) + 1, b);  // >= sqrt(s2)
        Int hi = floor_rat(-c + up);
        while (Rat(hi) + c > 0 && (Rat(hi) + c) * (Rat(hi) + c) > s2) --hi;
        Int lo = ceil_rat(-c - up);
        while (Rat(lo) + c < 0 && (Rat(lo) + c) * (Rat(lo) + c) > s2) ++lo;
        for (Int t = lo; t <= hi; ++t) {
            y[i] = t;
            Rat used = d[i] * (Rat(t) + c) * (Rat(t) + c);
            if (used > rem) continue;
            if (i == 0) {
                if (rem - used == 0) out.push_back(y);
            } else {
                rec(lvl - 1, rem - used);
            }
        }
        y[i] = 0;
    };
    rec(n, Rat(target));
}

std::vector<DivisorClass> enumerate_minus_one_wdp(const Surface& s) {
    const auto& l = s.lattice();
    Int d = s.k_squared();
    // integral basis of K-perp
    Mat krow{mat_vec(l.gram, l.canonical.coords)};
    std::vector<Vec> basis = integral_kernel(krow);
    std::size_t r = basis.size();
    if (r != l.rank - 1) throw Error("enumerate_minus_one: K-perp has unexpected rank");
    // Gram of K-perp, negated to a positive definite form
    std::vector<std::vector<Rat>> p(r, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            p[i][j] = Rat(-dot(basis[i], mat_vec(l.gram, basis[j])));
    // x = d*E + K runs over K-perp vectors of square -d(d+1)
    std::vector<Vec> shorts;
    vectors_of_norm(p, d * (d + 1), shorts);
    std::vector<DivisorClass> found;
    for (const Vec& y : shorts) {
        Vec x(l.rank, 0);
        for (std::size_t j = 0; j < r; ++j)
            if (y[j] != 0) x = add(x, scale(y[j], basis[j]));
        Vec e = sub(x, l.canonical.coords);
        bool integral = true;
        for (Int& c : e) {
            if (c % d != 0) { integral = false; break; }
            c /= d;
        }
        if (!integral) continue;
        DivisorClass cls = l.cls(e);
        bool ok = true;
        for (const auto& g : s.minus_two())
            if (s.pair(cls, g) < 0) { ok = false; break; }
        if (!ok) continue;
        if (self_intersection(l, cls) != -1 || pairing(l, cls, l.canonical) != -1)
            throw Error("enumerate_minus_one: internal arithmetic check failed");
        found.push_back(std::move(cls));
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

void profile_products(const std::vector<std::vector<Vec>>& per_group,
                      std::size_t g, Vec& acc,
                      const std::vector<std::vector<std::size_t>>& positions,
                      std::vector<Vec>& out) {
    if (g == per_group.size()) {
        out.push_back(acc);
        return;
    }
    for (const Vec& t : per_group[g]) {
        for (std::size_t i = 0; i < t.size(); ++i) acc[positions[g][i]] = t[i];
        profile_products(per_group, g + 1, acc, positions, out);
    }
}

// nonnegative t with sum(t_i * n_i) = c
void bounded_compositions(const std::vector<Int>& mult, std::size_t i, const Int& left,
                          Vec& cur, std::vector<Vec>& out) {
    if (i == mult.size()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    Int maxa = left / mult[i];
    for (Int a = 0; a <= maxa; ++a) {
        cur[i] = a;
        bounded_compositions(mult, i + 1, left - a * mult[i], cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Vec> minus_one_profiles(const Surface& s) {
    const auto& fs = s.fibers();
    const auto& g = s.minus_two();
    for (const auto& comp : fs.components)
        if (!comp.full_fiber)
            throw Error("enumerate_minus_one: enumeration not certified, effective "
                        "cone not polyhedral (a (-2)-component is not a full fiber)");
    std::vector<Vec> span;
    for (const auto& c : g) span.push_back(c.coords);
    if (rank_of_span(span) != s.lattice().rank - 1)
        throw Error("enumeration not certified, effective cone not polyhedral "
                    "((-2)-classes do not have maximal rank)");

    // per component: profiles t with sum(t_i * n_i) = c
    std::vector<std::vector<Vec>> per_group;
    std::vector<std::vector<std::size_t>> positions;
    for (const auto& comp : fs.components) {
        std::vector<Vec> ts;
        Vec cur(comp.members.size(), 0);
        bounded_compositions(comp.multiplicities, 0, comp.canonical_multiple, cur, ts);
        per_group.push_back(std::move(ts));
        positions.push_back(comp.members);
    }
    std::vector<Vec> profiles;
    Vec acc(g.size(), 0);
    profile_products(per_group, 0, acc, positions, profiles);
    std::sort(profiles.begin(), profiles.end());
    return profiles;
}

namespace {

std::optional<DivisorClass> solve_profile(const Surface& s, const Vec& t) {
    const auto& l = s.lattice();
    const auto& g = s.minus_two();
    Mat rows;
    for (const auto& c : g) rows.push_back(mat_vec(l.gram, c.coords));
    auto sol = solve_integral(rows, t);
    if (!sol) return std::nullopt;
    DivisorClass ep = l.cls(*sol);
    Int ep2 = self_intersection(l, ep);
    if ((ep2 + 1) % 2 != 0)
        throw Error("enumerate_minus_one: parity failure in profile solve");
    Int lambda = (ep2 + 1) / 2;
    Vec e = add(ep.coords, scale(lambda, l.canonical.coords));
    DivisorClass cls = l.cls(std::move(e));
    if (self_intersection(l, cls) != -1 || pairing(l, cls, l.canonical) != -1)
        throw Error("enumerate_minus_one: profile solution fails (-1) conditions");
    for (std::size_t i = 0; i < g.size(); ++i)
        if (s.pair(cls, g[i]) != t[i])
            throw Error("enumerate_minus_one: profile mismatch after solve");
    return cls;
}

}  // namespace

std::vector<DivisorClass> minus_one_from_profiles_serial(const Surface& s,
                                                         const std::vector<Vec>& profiles) {
    std::vector<DivisorClass> found;
    for (const Vec& t : profiles) {
        auto e = solve_profile(s, t);
        if (e) found.push_back(std::move(*e));
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<DivisorClass> minus_one_from_profiles_parallel(const Surface& s,
                                                           const std::vector<Vec>& profiles,
                                                           int jobs) {
    std::vector<std::optional<DivisorClass>> results(profiles.size());
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < long(profiles.size()); ++i)
        results[i] = solve_profile(s, profiles[i]);
#else
    (void)jobs;
    for (std::size_t i = 0; i < profiles.size(); ++i)
        results[i] = solve_profile(s, profiles[i]);
#endif
    std::vector<DivisorClass> found;
    for (auto& r : results)
        if (r) found.push_back(std::move(*r));
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<DivisorClass> enumerate_minus_one(const Surface& s) {
    if (s.kind() == SurfaceKind::WeakDelPezzo) return enumerate_minus_one_wdp(s);
    auto profiles = minus_one_profiles(s);
    return s.jobs() == 1 ? minus_one_from_profiles_serial(s, profiles)
                         : minus_one_from_profiles_parallel(s, profiles, s.jobs());
}

// ---------------------------------------------------------------------------
// blow-down

namespace {

Vec express_in_basis(const Mat& basis_cols, const Vec& v) {
    auto sol = solve_integral(basis_cols, v);
    if (!sol) throw Error("contract: class does not lie in the sublattice");
    return *sol;
}

}  // namespace

Contraction contract(const Surface& s, const DivisorClass& e) {
    const auto& l = s.lattice();
    const auto& m1 = s.minus_one();
    if (std::find(m1.begin(), m1.end(), e) == m1.end())
        throw Error("contract: class is not a listed (-1)-curve");

    Mat erow{mat_vec(l.gram, e.coords)};
    std::vector<Vec> basis = integral_kernel(erow);
    if (basis.size() != l.rank - 1)
        throw Error("contract: E-perp has unexpected rank");
    // columns of B are the new basis vectors in old coordinates
    Mat bcols(l.rank, Vec(basis.size(), 0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < l.rank; ++i) bcols[i][j] = basis[j][i];

    auto phi = [&](const DivisorClass& c) {
        Int ce = s.pair(c, e);
        return add(c.coords, scale(ce, e.coords));
    };

    Mat new_gram(basis.size(), Vec(basis.size(), 0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            new_gram[i][j] = dot(basis[i], mat_vec(l.gram, basis[j]));
    Vec new_k = express_in_basis(bcols, sub(l.canonical.coords, e.coords));

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("c" + std::to_string(i));
    PicardLattice nl = make_lattice(new_gram, new_k, labels);

    SurfaceModel nm;
    nm.lattice = nl;
    nm.kind = SurfaceKind::WeakDelPezzo;  // K^2 goes up by one, so > 0 in our setting
    nm.index = 1;
    nm.name = s.name() + "/contract(" + to_string(e.coords) + ")";
    std::vector<DivisorClass> new_m2, new_m1;
    auto push_curve = [&](const DivisorClass& c) {
        if (c == e) return;
        Vec img = phi(c);
        Int sq = dot(img, mat_vec(l.gram, img));
        if (sq == -2) new_m2.push_back(nl.cls(express_in_basis(bcols, img)));
        else if (sq == -1) new_m1.push_back(nl.cls(express_in_basis(bcols, img)));
    };
    for (const auto& c : s.minus_two()) push_curve(c);
    for (const auto& c : s.minus_one()) push_curve(c);
    std::sort(new_m2.begin(), new_m2.end());
    new_m2.erase(std::unique(new_m2.begin(), new_m2.end()), new_m2.end());
    std::sort(new_m1.begin(), new_m1.end());
    new_m1.erase(std::unique(new_m1.begin(), new_m1.end()), new_m1.end());
    nm.minus_two = std::move(new_m2);
    nm.minus_one = std::move(new_m1);

    // pushforward as one matrix: new coords of phi(x) = x + (x.E)E
    Mat push(basis.size(), Vec(l.rank, 0));
    for (std::size_t i = 0; i < l.rank; ++i) {
        Vec unit(l.rank, 0);
        unit[i] = 1;
        Int ue = dot(unit, mat_vec(l.gram, e.coords));
        Vec img = add(unit, scale(ue, e.coords));
        Vec coords = express_in_basis(bcols, img);
        for (std::size_t r = 0; r < basis.size(); ++r) push[r][i] = coords[r];
    }

    Contraction out{Surface(std::move(nm), s.jobs()), std::move(bcols), std::move(push),
                    l.id};
    return out;
}

DivisorClass Contraction::pushforward(const PicardLattice& old_lattice,
                                      const DivisorClass& c) const {
    if (c.basis_id != old_lattice.id || old_lattice.id != old_lattice_id)
        throw Error("pushforward: class not in the source lattice");
    return surface.lattice().cls(mat_vec(push_map, c.coords));
}

Vec Contraction::pullback_coords(const DivisorClass& c) const {
    if (c.basis_id != surface.lattice().id)
        throw Error("pullback: class not in the contracted lattice");
    return mat_vec(basis, c.coords);
}

}  // namespace nefcox
