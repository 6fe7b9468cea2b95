#include "nefcox/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nefcox/surface.hpp"

namespace nefcox {

namespace {

// tight-constraint sets as packed bit masks
using Mask = std::vector<std::uint64_t>;

struct DDState {
    std::size_t n = 0;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;
    std::vector<Vec> processed;

    Mask tight_mask(const Vec& r) const {
        Mask m((processed.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < processed.size(); ++i)
            if (dot(processed[i], r) == 0) m[i >> 6] |= std::uint64_t(1) << (i & 63);
        return m;
    }

    // extremal iff the tight constraints cut a face of dimension lineality+1
    bool extremal(const Vec& r) const {
        std::vector<Vec> tight;
        for (const Vec& a : processed)
            if (dot(a, r) == 0) tight.push_back(a);
        return rank_of_span(tight) == n - lineality.size() - 1;
    }

    void add_constraint(const Vec& a) {
        if (is_zero(a)) return;
        // Pivot a lineality direction out if the constraint sees one.
        std::size_t piv = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) { piv = i; break; }
        if (piv < lineality.size()) {
            Vec b0 = lineality[piv];
            Int ab0 = dot(a, b0);
            if (ab0 < 0) { b0 = negate(b0); ab0 = -ab0; }
            std::vector<Vec> new_lin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == piv) continue;
                Int abi = dot(a, lineality[i]);
                new_lin.push_back(primitive(sub(scale(ab0, lineality[i]), scale(abi, b0))));
            }
            std::vector<Vec> new_rays;
            for (const Vec& r : rays) {
                Int ar = dot(a, r);
                new_rays.push_back(primitive(sub(scale(ab0, r), scale(ar, b0))));
            }
            new_rays.push_back(primitive(b0));
            lineality = std::move(new_lin);
            rays = std::move(new_rays);
            processed.push_back(a);
            return;
        }
        // Constraint vanishes on the lineality space: split the rays.
        std::vector<std::size_t> pos, zer, neg;
        std::vector<Int> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
            else zer.push_back(i);
        }
        processed.push_back(a);
        if (neg.empty()) return;
        std::vector<Mask> tights(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) tights[i] = tight_mask(rays[i]);
        std::size_t words = tights.empty() ? 0 : tights[0].size();
        auto adjacent = [&](std::size_t p, std::size_t q) {
            Mask common(words);
            for (std::size_t w = 0; w < words; ++w) common[w] = tights[p][w] & tights[q][w];
            for (std::size_t r = 0; r < rays.size(); ++r) {
                if (r == p || r == q) continue;
                bool covers = true;
                for (std::size_t w = 0; w < words; ++w)
                    if (common[w] & ~tights[r][w]) { covers = false; break; }
                if (covers) return false;
            }
            return true;
        };
        std::vector<Vec> next;
        for (std::size_t i : zer) next.push_back(rays[i]);
        for (std::size_t i : pos) next.push_back(rays[i]);
        std::set<Vec> fresh;
        for (std::size_t p : pos)
            for (std::size_t q : neg)
                if (adjacent(p, q)) {
                    Vec comb =
                        primitive(sub(scale(val[p], rays[q]), scale(val[q], rays[p])));
                    if (fresh.insert(comb).second && extremal(comb))
                        next.push_back(std::move(comb));
                }
        rays = std::move(next);
    }
};

std::vector<Vec> sorted_unique(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

DualDescription dual_description(std::size_t ambient, const std::vector<Vec>& ineqs,
                                 const std::vector<Vec>& eqs) {
    DDState s;
    s.n = ambient;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec e(ambient, 0);
        e[i] = 1;
        s.lineality.push_back(std::move(e));
    }
    for (const Vec& e : eqs) {
        s.add_constraint(e);
        s.add_constraint(negate(e));
    }
    for (const Vec& a : ineqs) s.add_constraint(a);
    DualDescription out;
    out.rays = sorted_unique(std::move(s.rays));
    for (Vec& l : s.lineality) {
        Vec p = primitive(std::move(l));
        // canonical sign for lineality directions
        for (const Int& x : p) {
            if (x > 0) break;
            if (x < 0) { p = negate(p); break; }
        }
        out.lineality.push_back(std::move(p));
    }
    out.lineality = sorted_unique(std::move(out.lineality));
    return out;
}

std::size_t RationalCone::dim() const {
    std::vector<Vec> all = rays;
    all.insert(all.end(), lineality.begin(), lineality.end());
    return rank_of_span(all);
}

bool RationalCone::contains(const Vec& v) const {
    for (const Vec& f : facets)
        if (dot(f, v) < 0) return false;
    for (const Vec& e : equations)
        if (dot(e, v) != 0) return false;
    return true;
}

RationalCone cone_from_generators(std::size_t ambient, const std::vector<Vec>& gens) {
    RationalCone c;
    c.ambient = ambient;
    for (const Vec& g : gens)
        if (g.size() != ambient) throw Error("cone generator dimension mismatch");
    // facets = extremal rays of {a : a.g >= 0}; equations = its lineality
    auto dual = dual_description(ambient, gens);
    c.facets = dual.rays;
    c.equations = dual.lineality;
    // canonical generators from the facet description
    auto prim = dual_description(ambient, c.facets, c.equations);
    c.rays = prim.rays;
    c.lineality = prim.lineality;
    return c;
}

RationalCone cone_from_facets(std::size_t ambient, const std::vector<Vec>& ineqs) {
    RationalCone c;
    c.ambient = ambient;
    auto prim = dual_description(ambient, ineqs);
    c.rays = prim.rays;
    c.lineality = prim.lineality;
    auto dual = dual_description(ambient, c.rays, c.lineality);
    c.facets = dual.rays;
    c.equations = dual.lineality;
    return c;
}

RationalCone dual_cone(const RationalCone& c, const Mat& gram) {
    std::vector<Vec> ineqs;
    for (const Vec& g : c.rays) ineqs.push_back(mat_vec(gram, g));
    std::vector<Vec> eqs;
    for (const Vec& l : c.lineality) eqs.push_back(mat_vec(gram, l));
    RationalCone d;
    d.ambient = c.ambient;
    auto prim = dual_description(c.ambient, ineqs, eqs);
    d.rays = prim.rays;
    d.lineality = prim.lineality;
    auto dd = dual_description(c.ambient, d.rays, d.lineality);
    d.facets = dd.rays;
    d.equations = dd.lineality;
    return d;
}

namespace {

using Simplex = std::vector<int>;

// Every facet of a face F of the cone arises as F cut by one of the cone's
// own facet hyperplanes, so the recursion only restricts tight sets and
// checks ranks; no nested dual descriptions.
void pull_rec(const std::vector<Vec>& rays, const std::vector<Vec>& cone_facets,
              std::vector<int> face, std::size_t face_dim,
              std::map<std::vector<int>, std::vector<Simplex>>& memo,
              std::vector<Simplex>& out) {
    std::sort(face.begin(), face.end());
    auto it = memo.find(face);
    if (it != memo.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        return;
    }
    std::vector<Simplex> result;
    if (face.size() == face_dim) {
        result.push_back(face);
    } else {
        // pull the lexicographically smallest generator
        int v = face[0];
        for (int i : face)
            if (rays[i] < rays[v]) v = i;
        std::set<std::vector<int>> seen;
        for (const Vec& f : cone_facets) {
            if (dot(f, rays[v]) == 0) continue;
            std::vector<int> sub_face;
            for (int i : face)
                if (dot(f, rays[i]) == 0) sub_face.push_back(i);
            if (sub_face.empty() || !seen.insert(sub_face).second) continue;
            std::vector<Vec> sub;
            for (int i : sub_face) sub.push_back(rays[i]);
            if (rank_of_span(sub) != face_dim - 1) continue;  // not a facet of F
            std::vector<Simplex> lower;
            pull_rec(rays, cone_facets, sub_face, face_dim - 1, memo, lower);
            for (Simplex s : lower) {
                s.push_back(v);
                std::sort(s.begin(), s.end());
                result.push_back(std::move(s));
            }
        }
    }
    std::sort(result.begin(), result.end());
    out.insert(out.end(), result.begin(), result.end());
    memo.emplace(std::move(face), std::move(result));
}

}  // namespace

std::vector<std::vector<int>> pull_triangulation(std::size_t ambient,
                                                 const std::vector<Vec>& rays,
                                                 const std::vector<Vec>* facets) {
    if (rays.empty()) return {};
    std::vector<int> all(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) all[i] = int(i);
    if (rank_of_span(rays) != ambient)
        throw Error("pull_triangulation: cone not full-dimensional");
    std::vector<Vec> cone_facets;
    if (facets) {
        cone_facets = *facets;
    } else {
        cone_facets = dual_description(ambient, rays).rays;
    }
    std::map<std::vector<int>, std::vector<Simplex>> memo;
    std::vector<Simplex> out;
    pull_rec(rays, cone_facets, all, ambient, memo, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// adj * m = det(m) * identity, both exact.
Mat scaled_inverse(const Mat& m, Int& d) {
    d = det(m);
    if (d == 0) throw Error("scaled_inverse: singular matrix");
    std::size_t n = m.size();
    HnfSolver solver(m);
    Mat adj(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = d;
        auto x = solver.solve(e);
        if (!x) throw Error("scaled_inverse: adjugate solve failed");
        for (std::size_t r = 0; r < n; ++r) adj[r][i] = (*x)[r];
    }
    return adj;
}

}  // namespace

std::vector<Vec> parallelepiped_points(const Mat& rays_as_cols) {
    std::size_t n = rays_as_cols.size();
    {
        Int d = det(rays_as_cols);
        if (d == 0) throw Error("parallelepiped_points: simplex not full rank");
        if (d == 1 || d == -1) return {};  // unimodular: origin only
    }
    SmithResult sm = smith(rays_as_cols);
    Int total = 1;
    for (const Int& d : sm.diag) {
        if (d == 0) throw Error("parallelepiped_points: simplex not full rank");
        total *= d;
    }
    if (total == 1) return {};
    if (total > 20000000)
        throw Error("parallelepiped_points: index too large (" + total.str() + ")");
    Int detv;
    Mat adj = scaled_inverse(rays_as_cols, detv);
    Int adet = boost::multiprecision::abs(detv);

    std::vector<Vec> pts;
    pts.reserve(std::size_t(total) - 1);
    Vec y(n, 0);
    for (;;) {
        // increment the mixed-radix counter y
        std::size_t k = 0;
        while (k < n) {
            y[k] += 1;
            if (y[k] < sm.diag[k]) break;
            y[k] = 0;
            ++k;
        }
        if (k == n) break;
        // x = Uinv * y, reduced into the fundamental parallelepiped
        Vec x(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                x[i] += sm.uinv[i][j] * y[j];
            }
        }
        Vec t = mat_vec(adj, x);  // det * lambda
        if (detv < 0)
            for (Int& ti : t) ti = -ti;
        Vec p = x;
        for (std::size_t j = 0; j < n; ++j) {
            Int f = floor_div(t[j], adet);
            if (f == 0) continue;
            for (std::size_t i = 0; i < n; ++i) p[i] -= f * rays_as_cols[i][j];
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

namespace {

Mat simplex_columns(const std::vector<Vec>& rays, const std::vector<int>& simplex) {
    std::size_t n = rays[0].size();
    Mat cols(n, Vec(simplex.size(), 0));
    for (std::size_t j = 0; j < simplex.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) cols[i][j] = rays[simplex[j]][i];
    return cols;
}

// Cheap reducibility pre-filter: a point that stays in the cone after
// subtracting some extremal ray cannot be a Hilbert basis element.
struct RayFilter {
    const RationalCone& cone;
    std::vector<std::vector<Int>> ray_fvals;

    explicit RayFilter(const RationalCone& c) : cone(c) {
        for (const Vec& r : c.rays) {
            std::vector<Int> fv;
            for (const Vec& f : c.facets) fv.push_back(dot(f, r));
            ray_fvals.push_back(std::move(fv));
        }
    }

    bool survives(const Vec& p) const {
        std::vector<Int> pf;
        pf.reserve(cone.facets.size());
        for (const Vec& f : cone.facets) pf.push_back(dot(f, p));
        for (std::size_t r = 0; r < cone.rays.size(); ++r) {
            bool inside = true;
            for (std::size_t f = 0; f < pf.size(); ++f)
                if (pf[f] < ray_fvals[r][f]) { inside = false; break; }
            if (inside && p != cone.rays[r]) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<Vec> hilbert_candidates_serial(const RationalCone& c,
                                           const std::vector<std::vector<int>>& tri) {
    RayFilter filter(c);
    std::vector<Vec> cand;
    for (const Vec& r : c.rays) cand.push_back(primitive(r));
    for (const auto& s : tri) {
        for (Vec& p : parallelepiped_points(simplex_columns(c.rays, s)))
            if (filter.survives(p)) cand.push_back(std::move(p));
    }
    return sorted_unique(std::move(cand));
}

std::vector<Vec> hilbert_candidates_parallel(const RationalCone& c,
                                             const std::vector<std::vector<int>>& tri,
                                             int jobs) {
    RayFilter filter(c);
    std::vector<std::vector<Vec>> per_simplex(tri.size());
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long i = 0; i < long(tri.size()); ++i) {
        std::vector<Vec> keep;
        for (Vec& p : parallelepiped_points(simplex_columns(c.rays, tri[i])))
            if (filter.survives(p)) keep.push_back(std::move(p));
        per_simplex[i] = std::move(keep);
    }
#ifndef _OPENMP
    (void)jobs;
#endif
    std::vector<Vec> cand;
    for (const Vec& r : c.rays) cand.push_back(primitive(r));
    for (auto& pts : per_simplex)
        cand.insert(cand.end(), std::make_move_iterator(pts.begin()),
                    std::make_move_iterator(pts.end()));
    return sorted_unique(std::move(cand));
}

HilbertBasisResult hilbert_basis(const RationalCone& c, int jobs) {
    if (!c.pointed()) throw Error("hilbert_basis: cone is not pointed");
    if (c.dim() != c.ambient)
        throw Error("hilbert_basis: cone is not full-dimensional");
    if (c.rays.empty()) return {};

    auto tri = pull_triangulation(c.ambient, c.rays, &c.facets);
    std::vector<Vec> survivors = (jobs == 1) ? hilbert_candidates_serial(c, tri)
                                             : hilbert_candidates_parallel(c, tri, jobs);

    // interior functional: strictly positive on the cone minus the origin
    Vec height(c.ambient, 0);
    for (const Vec& f : c.facets) height = add(height, f);

    auto in_cone_nonzero = [&](const Vec& v) {
        if (is_zero(v)) return false;
        for (const Vec& f : c.facets)
            if (dot(f, v) < 0) return false;
        return true;
    };

    // Greedy minimality by increasing height.
    std::stable_sort(survivors.begin(), survivors.end(), [&](const Vec& a, const Vec& b) {
        Int ha = dot(height, a), hb = dot(height, b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    std::vector<Vec> basis;
    for (const Vec& x : survivors) {
        bool reducible = false;
        for (const Vec& h : basis) {
            if (in_cone_nonzero(sub(x, h))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return HilbertBasisResult{std::move(basis)};
}

MonoidCertificate monoid_member(const std::vector<Vec>& gens, const Vec& v) {
    MonoidCertificate out;
    out.multipliers.assign(gens.size(), 0);
    if (is_zero(v)) {
        out.member = true;
        return out;
    }
    std::vector<std::size_t> idx;
    std::vector<Vec> g;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != v.size()) throw Error("monoid_member: dimension mismatch");
        if (!is_zero(gens[i])) {
            idx.push_back(i);
            g.push_back(gens[i]);
        }
    }
    if (g.empty()) { out.multipliers.clear(); return out; }
    std::size_t n = v.size();

    // Fast path: independent generators have at most one solution.
    if (rank_of_span(g) == g.size()) {
        Mat cols(n, Vec(g.size(), 0));
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) cols[i][j] = g[j][i];
        auto sol = solve_integral(cols, v);
        if (sol) {
            bool ok = std::all_of(sol->begin(), sol->end(),
                                  [](const Int& a) { return a >= 0; });
            if (ok) {
                out.member = true;
                for (std::size_t j = 0; j < g.size(); ++j)
                    out.multipliers[idx[j]] = (*sol)[j];
                return out;
            }
        }
        out.multipliers.clear();
        return out;
    }

    // Strictly positive functional on the generators (exists iff pointed).
    auto dual = dual_description(n, g);
    std::vector<Vec> span_chk = dual.rays;
    span_chk.insert(span_chk.end(), dual.lineality.begin(), dual.lineality.end());
    if (rank_of_span(span_chk) != n)
        throw Error("monoid_member: generator cone is not pointed, search unbounded");
    Vec phi(n, 0);
    for (const Vec& r : dual.rays) phi = add(phi, r);
    // every remainder must stay inside cone(gens)
    auto in_cone = [&](const Vec& x) {
        for (const Vec& f : dual.rays)
            if (dot(f, x) < 0) return false;
        for (const Vec& l : dual.lineality)
            if (dot(l, x) != 0) return false;
        return true;
    };
    if (!in_cone(v)) {
        out.multipliers.clear();
        return out;
    }
    std::vector<Int> pg(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        pg[j] = dot(phi, g[j]);
        if (pg[j] <= 0) throw Error("monoid_member: internal functional not positive");
    }

    // order generators by decreasing functional value for earlier pruning
    std::vector<std::size_t> order(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pg[a] > pg[b]; });

    Vec mult(g.size(), 0);
    std::function<bool(std::size_t, Vec, Int)> dfs = [&](std::size_t pos, Vec rem,
                                                         Int prem) -> bool {
        if (is_zero(rem)) return true;
        if (pos == order.size() || prem <= 0) return false;
        std::size_t j = order[pos];
        Int amax = prem / pg[j];
        for (Int a = amax; a >= 0; --a) {
            Vec r2 = rem;
            for (std::size_t i = 0; i < n; ++i) r2[i] -= a * g[j][i];
            if (!in_cone(r2)) continue;
            mult[j] = a;
            if (dfs(pos + 1, std::move(r2), prem - a * pg[j])) return true;
        }
        mult[j] = 0;
        return false;
    };
    Int pv = dot(phi, v);
    if (pv > 0 && dfs(0, v, pv)) {
        out.member = true;
        for (std::size_t j = 0; j < g.size(); ++j) out.multipliers[idx[j]] = mult[j];
        return out;
    }
    out.multipliers.clear();
    return out;
}

RationalCone nef_cone(const Surface& s) {
    const auto& neg = s.negative_curves();
    if (neg.empty()) throw Error("nef_cone: no negative curves listed");
    std::vector<Vec> gens;
    for (const auto& c : neg) gens.push_back(c.coords);
    std::size_t n = s.lattice().rank;
    if (rank_of_span(gens) != n)
        throw Error("nef_cone: negative curves do not span the lattice, "
                    "effective cone not full-dimensional");
    std::vector<Vec> ineqs;
    for (const Vec& g : gens) ineqs.push_back(primitive(mat_vec(s.lattice().gram, g)));
    ineqs = sorted_unique(std::move(ineqs));

    RationalCone nef;
    nef.ambient = n;
    auto prim = dual_description(n, ineqs);
    nef.rays = prim.rays;
    nef.lineality = prim.lineality;  // empty: the dual of a full-dim cone is pointed
    // irredundant inequalities: those whose tight rays span a facet
    for (const Vec& a : ineqs) {
        std::vector<Vec> tight;
        for (const Vec& r : nef.rays)
            if (dot(a, r) == 0) tight.push_back(r);
        if (rank_of_span(tight) == n - 1) nef.facets.push_back(a);
    }
    return nef;
}

}  // namespace nefcox
