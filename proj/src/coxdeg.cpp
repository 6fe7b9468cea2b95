#include "nefcox/coxdeg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nefcox {

std::string nef_type_name(NefType t) {
    switch (t) {
        case NefType::Anticanonical: return "anticanonical";
        case NefType::ConicBundle: return "conic-bundle";
        case NefType::TwistedCubic: return "twisted-cubic";
        case NefType::F2Type: return "hirzebruch-class";
        case NefType::AnticanonicalPullback: return "anticanonical-pullback";
        case NefType::Other: return "other";
    }
    return "other";
}

std::string necessity_name(Necessity n) {
    switch (n) {
        case Necessity::Necessary: return "necessary";
        case Necessity::NotNecessary: return "not-necessary";
        case Necessity::Undetermined: return "undetermined";
    }
    return "undetermined";
}

std::vector<DivisorClass> orthogonal_negatives(const Surface& s, const DivisorClass& n) {
    std::vector<DivisorClass> out;
    for (const auto& c : s.negative_curves())
        if (s.pair(n, c) == 0) out.push_back(c);
    return out;
}

namespace {

std::size_t component_count(const Surface& s, const std::vector<DivisorClass>& nodes) {
    std::size_t k = nodes.size();
    std::vector<std::size_t> parent(k);
    for (std::size_t i = 0; i < k; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (s.pair(nodes[i], nodes[j]) > 0) parent[find(i)] = find(j);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < k; ++i) roots.insert(find(i));
    return roots.size();
}

}  // namespace

std::size_t orthogonal_component_count(const Surface& s, const DivisorClass& n) {
    return component_count(s, orthogonal_negatives(s, n));
}

NefClassification classify_nef(const Surface& s, const DivisorClass& n) {
    NefClassification out;
    out.square = self_intersection(s.lattice(), n);
    out.kdeg = s.pair(s.minus_k(), n);

    if (out.square == 0 && out.kdeg == 0) {
        if (!(n == s.minus_k())) {
            out.type = NefType::Other;
            out.warning = "isotropic K-orthogonal class is not -K";
            return out;
        }
        out.type = NefType::Anticanonical;
        return out;
    }
    if (out.square == 0 && out.kdeg == 2) {
        out.type = NefType::ConicBundle;
        return out;
    }
    if (out.square == 1 && out.kdeg == 3) {
        out.type = NefType::TwistedCubic;
        return out;
    }
    if (out.square == 2 && out.kdeg == 4) {
        out.type = NefType::F2Type;
        return out;
    }
    if (out.square == out.kdeg && out.square >= 1) {
        out.type = NefType::AnticanonicalPullback;
        out.degree = out.square;
        // contract (-1)-curves orthogonal to N until none remains
        std::deque<Contraction> chain;
        const Surface* cur = &s;
        DivisorClass cn = n;
        Mat cum = identity(s.lattice().rank);
        for (;;) {
            const DivisorClass* pick = nullptr;
            for (const auto& e : cur->minus_one())
                if (cur->pair(cn, e) == 0) { pick = &e; break; }
            if (!pick) break;
            DivisorClass contracted = *pick;
            out.trace.push_back(s.lattice().cls(mat_vec(cum, contracted.coords)));
            chain.push_back(contract(*cur, contracted));
            cn = chain.back().pushforward(cur->lattice(), cn);
            cum = mat_mul(cum, chain.back().basis);
            cur = &chain.back().surface;
        }
        if (!(cn == cur->minus_k())) {
            out.type = NefType::Other;
            out.warning = "class of type (d,d) is not an anticanonical pullback";
            return out;
        }
        out.dp_flag = cur->minus_two().empty();
        if (!out.dp_flag) {
            std::vector<DivisorClass> roots = cur->minus_two();
            std::sort(roots.begin(), roots.end());
            out.surviving_root = s.lattice().cls(mat_vec(cum, roots.front().coords));
        }
        return out;
    }
    out.type = NefType::Other;
    out.warning = "numerical type (" + out.square.str() + "," + out.kdeg.str() +
                  ") matches no Hilbert-basis class kind";
    return out;
}

namespace {

bool is_toric_boundary(const Surface& s) {
    const auto& neg = s.negative_curves();
    if (neg.size() != s.lattice().rank + 2) return false;
    if (component_count(s, neg) != 1) return false;
    for (const auto& a : neg) {
        std::size_t deg = 0;
        for (const auto& b : neg) {
            if (a == b) continue;
            if (s.pair(a, b) > 0) ++deg;
        }
        if (deg != 2) return false;
    }
    return true;
}

bool extremal_root_lattice(const Surface& s) {
    std::vector<Vec> roots;
    for (const auto& c : s.minus_two()) roots.push_back(c.coords);
    return rank_of_span(roots) == s.lattice().rank - 1;
}

// Lemma-style hypotheses for "H^0(D) = H^0(D-A)s_A + H^0(D-B)s_B":
// A an irreducible rational curve with D.A = 0, B effective with h0(D-B) > 0
// and A not in the base locus of |D-B| nor a fixed component of |B|.
bool section_transfer_hypotheses(const Surface& s, const DivisorClass& d,
                                 const DivisorClass& a, const DivisorClass& b,
                                 std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const auto& negs = s.negative_curves();
    if (std::find(negs.begin(), negs.end(), a) == negs.end())
        return fail("transfer class A is not a listed negative curve");
    if (s.pair(d, a) != 0) return fail("D.A != 0");
    if (a == b || d == a || d == b) return fail("transfer classes must be distinct from D");
    Reduction rd = reduce_to_nef(s, d);
    if (!rd.effective || !rd.subtracted.empty())
        return fail("D has negative curves in its base locus");
    if (cohomology(s, b).h0 <= 0) return fail("B is not effective");
    DivisorClass diff = s.lattice().cls(sub(d.coords, b.coords));
    if (cohomology(s, diff).h0 <= 0) return fail("h0(D-B) = 0");
    Reduction rb = reduce_to_nef(s, diff);
    if (!rb.effective) return fail("D-B not effective");
    for (const auto& c : rb.subtracted)
        if (c == a) return fail("A is in the base locus of |D-B|");
    if (!is_zero(rb.nef_part.coords)) {
        BaseLocusKind bl = base_locus(s, rb.nef_part);
        if (bl.tag == BaseLocusTag::Curve && bl.curve && *bl.curve == a)
            return fail("A is the base curve of |D-B|");
    }
    // A must not be a fixed component of |B|
    Reduction rbb = reduce_to_nef(s, b);
    if (!rbb.effective) return fail("B not effective");
    for (const auto& c : rbb.subtracted)
        if (c == a) return fail("A is a fixed component of |B|");
    if (!is_zero(rbb.nef_part.coords)) {
        BaseLocusKind bl = base_locus(s, rbb.nef_part);
        if (bl.tag == BaseLocusTag::Curve && bl.curve && *bl.curve == a)
            return fail("A is the base curve of |B|");
    }
    return true;
}

}  // namespace

std::optional<NecessityVerdict> theorem_verdict(const Surface& s, const DivisorClass& n,
                                                const NefClassification& cls) {
    NecessityVerdict v;
    switch (cls.type) {
        case NefType::Anticanonical: {
            if (s.index() == 1) {
                const auto& fs = s.fibers();
                bool unique_fiber =
                    fs.components.size() == 1 && fs.components.front().full_fiber;
                v.status = unique_fiber ? Necessity::Necessary : Necessity::NotNecessary;
                v.rule = unique_fiber ? "anticanonical-unique-reducible-fiber"
                                      : "anticanonical-several-reducible-fibers";
            } else {
                bool irr = s.anticanonical_irreducible();
                v.status = irr ? Necessity::Necessary : Necessity::NotNecessary;
                v.rule = irr ? "anticanonical-irreducible" : "anticanonical-reducible";
            }
            return v;
        }
        case NefType::ConicBundle: {
            std::size_t k = orthogonal_component_count(s, n);
            v.status = k == 1 ? Necessity::Necessary : Necessity::NotNecessary;
            v.rule = k == 1 ? "conic-bundle-unique-reducible-fiber"
                            : "conic-bundle-several-reducible-fibers";
            v.note = std::to_string(k) + " reducible fiber(s)";
            return v;
        }
        case NefType::TwistedCubic: {
            std::size_t k = orthogonal_component_count(s, n);
            v.status = k == 1 ? Necessity::Necessary : Necessity::NotNecessary;
            v.rule = k == 1 ? "twisted-cubic-single-center" : "twisted-cubic-several-centers";
            v.note = std::to_string(k) + " blown-up point(s)";
            return v;
        }
        case NefType::F2Type: {
            v.status = Necessity::NotNecessary;
            v.rule = "hirzebruch-pullback";
            return v;
        }
        case NefType::AnticanonicalPullback: {
            if (!cls.trace.empty()) {
                if (!cls.dp_flag) {
                    // a surviving (-2)-curve transfers the sections
                    NecessityVerdict w;
                    w.status = Necessity::NotNecessary;
                    w.rule = "section-transfer";
                    w.note = "pullback with surviving (-2)-curve";
                    w.witness = {*cls.surviving_root, cls.trace.front()};
                    std::string why;
                    if (section_transfer_hypotheses(s, n, w.witness[0], w.witness[1], &why))
                        return w;
                    return std::nullopt;  // fall back to the search stage
                }
                if (s.kind() == SurfaceKind::Elliptic && s.index() == 1) {
                    v.status = Necessity::NotNecessary;
                    v.rule = "pullback-jacobian-index-one";
                    return v;
                }
                if (s.kind() == SurfaceKind::Elliptic && s.index() > 1) {
                    if (!s.anticanonical_irreducible()) return std::nullopt;
                    if (cls.degree == 1) {
                        v.status = Necessity::Necessary;
                        v.rule = "pullback-del-pezzo-degree-one";
                        return v;
                    }
                    v.status = Necessity::NotNecessary;
                    v.rule = "pullback-del-pezzo-degree-" + cls.degree.str();
                    return v;
                }
                return std::nullopt;  // weak del Pezzo pullbacks: no decisive rule
            }
            // trivial trace: the class is -K of a weak del Pezzo surface
            if (s.kind() == SurfaceKind::WeakDelPezzo && n == s.minus_k()) {
                if (s.minus_two().empty()) {
                    if (s.k_squared() == 1) {
                        v.status = Necessity::Necessary;
                        v.rule = "del-pezzo-degree-one-anticanonical";
                    } else {
                        v.status = Necessity::NotNecessary;
                        v.rule = "del-pezzo-anticanonical-decomposes";
                    }
                    return v;
                }
                if (is_toric_boundary(s)) {
                    v.status = Necessity::NotNecessary;
                    v.rule = "toric-anticanonical";
                    return v;
                }
                if (extremal_root_lattice(s)) {
                    v.status = Necessity::Necessary;
                    v.rule = "extremal-anticanonical";
                    return v;
                }
            }
            return std::nullopt;
        }
        case NefType::Other: return std::nullopt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Koszul elimination stage

namespace {

struct Leg {
    DivisorClass cls;
    bool negative = false;
    bool irr_curve = false;  // irreducible curve of known class
    bool nef = false;
    BaseLocusTag bl = BaseLocusTag::Free;
    Int h0 = 0;
};

Leg make_leg(const Surface& s, const DivisorClass& c) {
    Leg l;
    l.cls = c;
    const auto& negs = s.negative_curves();
    l.negative = std::find(negs.begin(), negs.end(), c) != negs.end();
    l.nef = s.is_nef(c);
    if (l.nef && !is_zero(c.coords)) l.bl = base_locus(s, c).tag;
    l.h0 = cohomology(s, c).h0;
    l.irr_curve = l.negative;
    if (!l.irr_curve && s.kind() == SurfaceKind::Elliptic && s.index() > 1 &&
        c == s.minus_k() && s.anticanonical_irreducible())
        l.irr_curve = true;
    return l;
}

bool movable_or_curve(const Leg& l) {
    return l.irr_curve || (l.nef && l.bl == BaseLocusTag::Free);
}

// The two classes admit disjoint representative curves.
bool disjoint_pair(const Surface& s, const Leg& a, const Leg& b) {
    if (s.pair(a.cls, b.cls) != 0) return false;
    if (a.cls == b.cls)
        return a.nef && a.bl == BaseLocusTag::Free && a.h0 >= 2;
    return movable_or_curve(a) && movable_or_curve(b);
}

bool finite_leg(const Leg& l) {
    return l.irr_curve || (l.nef && l.bl != BaseLocusTag::Curve);
}

// Representatives meeting in at most finitely many points.
bool pairwise_finite(const Leg& a, const Leg& b) {
    if (!finite_leg(a) || !finite_leg(b)) return false;
    if (a.cls == b.cls)
        return a.nef && a.bl != BaseLocusTag::Curve && a.h0 >= 2;
    return true;
}

// Representatives with empty triple intersection.
bool empty_triple(const Surface& s, const Leg& a, const Leg& b, const Leg& c) {
    if (disjoint_pair(s, a, b) && disjoint_pair(s, a, c) && disjoint_pair(s, b, c))
        return true;
    const Leg* legs[3] = {&a, &b, &c};
    for (int free_i = 0; free_i < 3; ++free_i) {
        const Leg& z = *legs[free_i];
        const Leg& x = *legs[(free_i + 1) % 3];
        const Leg& y = *legs[(free_i + 2) % 3];
        if (z.nef && z.bl == BaseLocusTag::Free && pairwise_finite(x, y)) return true;
    }
    return false;
}

std::vector<Leg> pair_pool(const Surface& s) {
    std::vector<DivisorClass> classes = s.negative_curves();
    for (const Vec& h : s.nef_hilbert_basis()) classes.push_back(s.lattice().cls(h));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<Leg> pool;
    for (const auto& c : classes)
        if (!is_zero(c.coords) && cohomology(s, c).h0 > 0) pool.push_back(make_leg(s, c));
    return pool;
}

std::vector<Leg> triple_pool(const Surface& s, const KoszulOptions& opt) {
    std::vector<DivisorClass> classes = s.negative_curves();
    std::vector<Vec> hb = s.nef_hilbert_basis();
    for (const Vec& h : hb) classes.push_back(s.lattice().cls(h));
    // sums are formed from the lowest-height basis elements; large bases
    // would otherwise square the pool
    std::vector<Vec> sum_src = hb;
    {
        const Vec& amp = s.ample_class().coords;
        Mat gram = s.lattice().gram;
        std::stable_sort(sum_src.begin(), sum_src.end(), [&](const Vec& a, const Vec& b) {
            Int ha = dot(amp, mat_vec(gram, a)), hb2 = dot(amp, mat_vec(gram, b));
            if (ha != hb2) return ha < hb2;
            return a < b;
        });
        if (sum_src.size() > 48) sum_src.resize(48);
    }
    if (opt.pool_depth >= 2) {
        for (std::size_t i = 0; i < sum_src.size(); ++i)
            for (std::size_t j = i; j < sum_src.size(); ++j)
                classes.push_back(s.lattice().cls(add(sum_src[i], sum_src[j])));
    }
    if (opt.pool_depth >= 3) {
        for (std::size_t i = 0; i < sum_src.size(); ++i)
            for (std::size_t j = i; j < sum_src.size(); ++j)
                for (std::size_t k = j; k < sum_src.size(); ++k)
                    classes.push_back(s.lattice().cls(add(add(sum_src[i], sum_src[j]),
                                                          sum_src[k])));
    }
    if (s.kind() == SurfaceKind::Elliptic) {
        for (int a = 1; a <= s.index() + 1; ++a)
            classes.push_back(s.lattice().cls(scale(-a, s.lattice().canonical.coords)));
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<Leg> pool;
    for (const auto& c : classes)
        if (!is_zero(c.coords) && cohomology(s, c).h0 > 0) pool.push_back(make_leg(s, c));
    return pool;
}

DivisorClass minus_legs(const Surface& s, const DivisorClass& d,
                        std::initializer_list<const Leg*> legs) {
    Vec v = d.coords;
    for (const Leg* l : legs) v = sub(v, l->cls.coords);
    return s.lattice().cls(std::move(v));
}

}  // namespace

std::optional<NecessityVerdict> koszul_pair_test(const Surface& s, const DivisorClass& d) {
    auto pool = pair_pool(s);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].cls == d) continue;
        for (std::size_t j = i; j < pool.size(); ++j) {
            if (pool[j].cls == d) continue;
            if (!disjoint_pair(s, pool[i], pool[j])) continue;
            if (cohomology(s, minus_legs(s, d, {&pool[i], &pool[j]})).h1 != 0) continue;
            NecessityVerdict v;
            v.status = Necessity::NotNecessary;
            v.rule = "koszul-pair";
            v.witness = {pool[i].cls, pool[j].cls};
            return v;
        }
    }
    return std::nullopt;
}

std::optional<NecessityVerdict> koszul_triple_test(const Surface& s, const DivisorClass& d,
                                                   const KoszulOptions& opt) {
    auto pool = triple_pool(s, opt);
    auto pair_h1_ok = [&](const Leg& a, const Leg& b) {
        return cohomology(s, minus_legs(s, d, {&a, &b})).h1 == 0;
    };
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].cls == d) continue;
        for (std::size_t j = i; j < pool.size(); ++j) {
            if (pool[j].cls == d) continue;
            for (std::size_t k = j; k < pool.size(); ++k) {
                if (pool[k].cls == d) continue;
                if (!empty_triple(s, pool[i], pool[j], pool[k])) continue;
                if (!pair_h1_ok(pool[i], pool[j])) continue;
                if (!pair_h1_ok(pool[i], pool[k])) continue;
                if (!pair_h1_ok(pool[j], pool[k])) continue;
                if (cohomology(s, minus_legs(s, d, {&pool[i], &pool[j], &pool[k]})).h2 != 0)
                    continue;
                NecessityVerdict v;
                v.status = Necessity::NotNecessary;
                v.rule = "koszul-triple";
                v.witness = {pool[i].cls, pool[j].cls, pool[k].cls};
                return v;
            }
        }
    }
    return std::nullopt;
}

std::optional<NecessityVerdict> section_transfer_test(const Surface& s,
                                                      const DivisorClass& d) {
    Reduction rd = reduce_to_nef(s, d);
    if (!rd.effective || !rd.subtracted.empty()) return std::nullopt;
    auto pool = pair_pool(s);
    for (const auto& a : s.negative_curves()) {
        if (s.pair(d, a) != 0) continue;
        if (a == d) continue;
        for (const auto& bleg : pool) {
            const DivisorClass& b = bleg.cls;
            std::string why;
            if (!section_transfer_hypotheses(s, d, a, b, &why)) continue;
            NecessityVerdict v;
            v.status = Necessity::NotNecessary;
            v.rule = "section-transfer";
            v.witness = {a, b};
            return v;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// pipeline

std::vector<DivisorClass> candidate_degrees(const Surface& s) {
    std::vector<DivisorClass> out = s.negative_curves();
    for (const Vec& h : s.nef_hilbert_basis()) out.push_back(s.lattice().cls(h));
    if (s.kind() == SurfaceKind::Elliptic && s.index() >= 3) {
        for (int alpha = 2; alpha < s.index(); ++alpha) {
            for (const auto& e : s.minus_one()) {
                DivisorClass c = s.lattice().cls(
                    add(scale(-alpha, s.lattice().canonical.coords), e.coords));
                if (s.is_ample(c)) out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

NecessityVerdict koszul_stage(const Surface& s, const DivisorClass& d,
                              const KoszulOptions& opt, const std::string& none_reason) {
    if (auto v = koszul_pair_test(s, d)) return *v;
    if (auto v = koszul_triple_test(s, d, opt)) return *v;
    if (auto v = section_transfer_test(s, d)) return *v;
    NecessityVerdict v;
    v.status = Necessity::Undetermined;
    v.rule = "no-elimination-found";
    v.note = none_reason;
    return v;
}

}  // namespace

Report analyze(const Surface& s, const KoszulOptions& opt) {
    Report rep;
    rep.name = s.name();
    rep.kind = s.kind();
    rep.index = s.index();
    rep.rank = s.lattice().rank;

    // warm the shared caches before the parallel stage
    const auto& negs = s.negative_curves();
    std::vector<Vec> hb = s.nef_hilbert_basis();
    if (s.kind() == SurfaceKind::Elliptic) {
        s.fibers();
        s.anticanonical_irreducible();
    }

    for (const auto& c : negs) {
        CandidateRow row;
        row.cls = c;
        row.category = "negative-curve";
        row.verdict.status = Necessity::Necessary;
        row.verdict.rule = "negative-curve";
        rep.rows.push_back(std::move(row));
    }

    std::vector<DivisorClass> extras;
    {
        std::set<Vec> hbset(hb.begin(), hb.end());
        if (s.kind() == SurfaceKind::Elliptic && s.index() >= 3) {
            for (int alpha = 2; alpha < s.index(); ++alpha)
                for (const auto& e : s.minus_one()) {
                    DivisorClass c = s.lattice().cls(
                        add(scale(-alpha, s.lattice().canonical.coords), e.coords));
                    if (s.is_ample(c) && !hbset.count(c.coords)) extras.push_back(c);
                }
            std::sort(extras.begin(), extras.end());
            extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
        }
    }

    std::vector<CandidateRow> nef_rows(hb.size());
    std::vector<CandidateRow> extra_rows(extras.size());
    long total = long(hb.size() + extras.size());
#ifdef _OPENMP
    int threads = s.jobs() > 0 ? s.jobs() : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (s.jobs() != 1)
#endif
    for (long t = 0; t < total; ++t) {
        if (t < long(hb.size())) {
            DivisorClass n = s.lattice().cls(hb[t]);
            CandidateRow row;
            row.cls = n;
            row.category = "nef";
            row.classification = classify_nef(s, n);
            if (auto v = theorem_verdict(s, n, *row.classification)) {
                row.verdict = *v;
            } else {
                std::string reason = "no decisive rule";
                if (row.classification->type == NefType::AnticanonicalPullback &&
                    row.classification->dp_flag && s.kind() == SurfaceKind::Elliptic &&
                    s.index() > 1 && !s.anticanonical_irreducible())
                    reason = "reducible anticanonical curve: torsion data needed";
                row.verdict = koszul_stage(s, n, opt, reason);
            }
            nef_rows[t] = std::move(row);
        } else {
            const DivisorClass& c = extras[t - hb.size()];
            CandidateRow row;
            row.cls = c;
            row.category = "ample-extra";
            row.verdict =
                koszul_stage(s, c, opt, "ample class -aK+E: no decisive rule stated");
            extra_rows[t - hb.size()] = std::move(row);
        }
    }
    for (auto& r : nef_rows) rep.rows.push_back(std::move(r));
    for (auto& r : extra_rows) rep.rows.push_back(std::move(r));

    for (const auto& row : rep.rows) {
        if (row.verdict.status == Necessity::Necessary) {
            ++rep.summary.necessary_total;
            if (row.category == "negative-curve") ++rep.summary.negative;
            else if (row.classification &&
                     row.classification->type == NefType::ConicBundle)
                ++rep.summary.conic_bundles;
            else if (row.classification &&
                     row.classification->type == NefType::TwistedCubic)
                ++rep.summary.twisted_cubics;
            else if (row.classification &&
                     row.classification->type == NefType::Anticanonical)
                ++rep.summary.anticanonical;
            else if (row.classification &&
                     row.classification->type == NefType::AnticanonicalPullback &&
                     row.classification->trace.empty() &&
                     row.cls == s.minus_k())
                ++rep.summary.anticanonical;  // -K of a weak del Pezzo surface
            else
                ++rep.summary.other_necessary;
        } else if (row.verdict.status == Necessity::Undetermined) {
            ++rep.summary.undetermined;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// verdict re-verification

bool verify_verdict(const Surface& s, const CandidateRow& row, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const NecessityVerdict& v = row.verdict;
    const DivisorClass& d = row.cls;

    if (v.rule == "negative-curve") {
        const auto& negs = s.negative_curves();
        if (std::find(negs.begin(), negs.end(), d) == negs.end())
            return fail("class is not a listed negative curve");
        return true;
    }
    if (v.rule == "koszul-pair") {
        if (v.witness.size() != 2) return fail("pair witness needs two classes");
        Leg a = make_leg(s, v.witness[0]), b = make_leg(s, v.witness[1]);
        if (a.h0 <= 0 || b.h0 <= 0) return fail("pair witness classes must be effective");
        if (v.witness[0] == d || v.witness[1] == d)
            return fail("pair witness equals the candidate");
        if (!disjoint_pair(s, a, b)) return fail("pair witness not certified disjoint");
        DivisorClass rest =
            s.lattice().cls(sub(sub(d.coords, a.cls.coords), b.cls.coords));
        if (cohomology(s, rest).h1 != 0) return fail("h1(D-E1-E2) != 0");
        return true;
    }
    if (v.rule == "koszul-triple") {
        if (v.witness.size() != 3) return fail("triple witness needs three classes");
        Leg a = make_leg(s, v.witness[0]), b = make_leg(s, v.witness[1]),
            c = make_leg(s, v.witness[2]);
        if (a.h0 <= 0 || b.h0 <= 0 || c.h0 <= 0)
            return fail("triple witness classes must be effective");
        if (v.witness[0] == d || v.witness[1] == d || v.witness[2] == d)
            return fail("triple witness equals the candidate");
        if (!empty_triple(s, a, b, c)) return fail("triple intersection not certified empty");
        auto h1of = [&](const Leg& x, const Leg& y) {
            return cohomology(s, minus_legs(s, d, {&x, &y})).h1;
        };
        if (h1of(a, b) != 0 || h1of(a, c) != 0 || h1of(b, c) != 0)
            return fail("some h1(D-Ei-Ej) != 0");
        DivisorClass rest = s.lattice().cls(
            sub(sub(sub(d.coords, a.cls.coords), b.cls.coords), c.cls.coords));
        if (cohomology(s, rest).h2 != 0) return fail("h2(D-E1-E2-E3) != 0");
        return true;
    }
    if (v.rule == "section-transfer") {
        if (v.witness.size() != 2) return fail("transfer witness needs two classes");
        return section_transfer_hypotheses(s, d, v.witness[0], v.witness[1], why);
    }
    if (v.rule == "anticanonical-unique-reducible-fiber" ||
        v.rule == "anticanonical-several-reducible-fibers") {
        if (!(d == s.minus_k())) return fail("class is not -K");
        const auto& fs = s.fibers();
        bool unique = fs.components.size() == 1 && fs.components.front().full_fiber;
        return unique == (v.status == Necessity::Necessary)
                   ? true
                   : fail("fiber count disagrees with the verdict");
    }
    if (v.rule == "anticanonical-irreducible" || v.rule == "anticanonical-reducible") {
        if (!(d == s.minus_k())) return fail("class is not -K");
        bool irr = s.anticanonical_irreducible();
        return irr == (v.status == Necessity::Necessary)
                   ? true
                   : fail("irreducibility disagrees with the verdict");
    }
    if (v.rule == "conic-bundle-unique-reducible-fiber" ||
        v.rule == "conic-bundle-several-reducible-fibers") {
        if (self_intersection(s.lattice(), d) != 0 || s.pair(s.minus_k(), d) != 2)
            return fail("class is not a conic bundle");
        std::size_t k = orthogonal_component_count(s, d);
        return (k == 1) == (v.status == Necessity::Necessary)
                   ? true
                   : fail("reducible fiber count disagrees");
    }
    if (v.rule == "twisted-cubic-single-center" ||
        v.rule == "twisted-cubic-several-centers") {
        if (self_intersection(s.lattice(), d) != 1 || s.pair(s.minus_k(), d) != 3)
            return fail("class is not a twisted cubic");
        std::size_t k = orthogonal_component_count(s, d);
        return (k == 1) == (v.status == Necessity::Necessary)
                   ? true
                   : fail("center count disagrees");
    }
    if (v.rule == "hirzebruch-pullback") {
        if (self_intersection(s.lattice(), d) != 2 || s.pair(s.minus_k(), d) != 4)
            return fail("class is not of Hirzebruch pullback type");
        return v.status == Necessity::NotNecessary ? true : fail("wrong status");
    }
    if (v.rule == "pullback-jacobian-index-one")
        return s.index() == 1 && v.status == Necessity::NotNecessary
                   ? true
                   : fail("rule applies to index-one surfaces only");
    if (v.rule == "pullback-del-pezzo-degree-one") {
        NefClassification c = classify_nef(s, d);
        if (c.type != NefType::AnticanonicalPullback || !c.dp_flag || c.degree != 1)
            return fail("classification mismatch");
        if (!(s.index() > 1 && s.anticanonical_irreducible()))
            return fail("needs index > 1 and irreducible anticanonical curve");
        return v.status == Necessity::Necessary ? true : fail("wrong status");
    }
    if (v.rule.rfind("pullback-del-pezzo-degree-", 0) == 0) {
        NefClassification c = classify_nef(s, d);
        if (c.type != NefType::AnticanonicalPullback || !c.dp_flag || c.degree < 2)
            return fail("classification mismatch");
        return v.status == Necessity::NotNecessary ? true : fail("wrong status");
    }
    if (v.rule == "del-pezzo-degree-one-anticanonical")
        return s.minus_two().empty() && s.k_squared() == 1 && d == s.minus_k()
                   ? true
                   : fail("not -K of a degree-one del Pezzo surface");
    if (v.rule == "del-pezzo-anticanonical-decomposes")
        return s.minus_two().empty() && s.k_squared() >= 2 && d == s.minus_k()
                   ? true
                   : fail("not -K of a del Pezzo surface of degree >= 2");
    if (v.rule == "toric-anticanonical")
        return is_toric_boundary(s) && d == s.minus_k() ? true
                                                        : fail("surface is not toric");
    if (v.rule == "extremal-anticanonical")
        return extremal_root_lattice(s) && !is_toric_boundary(s) && d == s.minus_k()
                   ? true
                   : fail("surface is not extremal non-toric");
    if (v.rule == "no-elimination-found")
        return v.status == Necessity::Undetermined ? true : fail("wrong status");
    return fail("unknown rule: " + v.rule);
}

}  // namespace nefcox
