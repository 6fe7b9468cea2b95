#include "nefcox/cohomology.hpp"

#include <algorithm>

namespace nefcox {

Reduction reduce_to_nef(const Surface& s, const DivisorClass& d) {
    const auto& negs = s.negative_curves();
    const DivisorClass& ample = s.ample_class();
    Reduction out;
    DivisorClass cur = d;
    for (;;) {
        if (s.pair(ample, cur) < 0) {
            out.effective = false;
            out.subtracted.clear();
            return out;
        }
        const DivisorClass* worst = nullptr;
        for (const auto& c : negs) {
            if (s.pair(cur, c) < 0) { worst = &c; break; }
        }
        if (!worst) {
            out.effective = true;
            out.nef_part = cur;
            return out;
        }
        out.subtracted.push_back(*worst);
        cur = s.lattice().cls(sub(cur.coords, worst->coords));
    }
}

bool is_effective(const Surface& s, const DivisorClass& d) {
    return reduce_to_nef(s, d).effective;
}

namespace {

// D = a * (-K) exactly, or nothing.
std::optional<Int> anticanonical_multiple(const Surface& s, const DivisorClass& d) {
    const Vec& k = s.lattice().canonical.coords;
    if (is_zero(d.coords)) return Int(0);
    std::size_t i = 0;
    while (i < k.size() && k[i] == 0) ++i;
    if (i == k.size()) return std::nullopt;
    if (d.coords[i] % k[i] != 0) return std::nullopt;
    Int a = -d.coords[i] / k[i];
    if (d.coords != scale(-a, k)) return std::nullopt;
    return a;
}

}  // namespace

Int h1_nef(const Surface& s, const DivisorClass& d) {
    if (!s.is_nef(d)) throw Error("h1_nef: class is not nef");
    if (s.kind() == SurfaceKind::WeakDelPezzo) return 0;
    Int kd = s.pair(s.minus_k(), d);
    if (kd > 0) return 0;
    if (kd < 0) throw Error("h1_nef: nef class with -K.D < 0 on an elliptic surface");
    auto a = anticanonical_multiple(s, d);
    if (!a || *a < 0)
        throw Error("h1_nef: nef class orthogonal to K is not a multiple of -K; "
                    "model invalid");
    if (s.index() == 1) return *a;
    return *a / s.index();  // floor, a >= 0
}

CohomologyVector cohomology(const Surface& s, const DivisorClass& d) {
    std::array<Int, 4> cached;
    if (s.cache_lookup(d.coords, cached))
        return CohomologyVector{cached[0], cached[1], cached[2], cached[3]};

    Int chi = riemann_roch(s.lattice(), d).chi;
    auto h0_of = [&](const DivisorClass& x) -> Int {
        Reduction red = reduce_to_nef(s, x);
        if (!red.effective) return 0;
        Int c = riemann_roch(s.lattice(), red.nef_part).chi;
        return c + h1_nef(s, red.nef_part);
    };
    Int h0 = h0_of(d);
    DivisorClass serre = s.lattice().cls(sub(s.lattice().canonical.coords, d.coords));
    Int h2 = h0_of(serre);
    Int h1 = h0 + h2 - chi;
    if (h1 < 0)
        throw Error("cohomology: negative h1 for class (" + to_string(d.coords) +
                    "); model data is inconsistent");
    s.cache_store(d.coords, {h0, h1, h2, chi});
    return CohomologyVector{h0, h1, h2, chi};
}

BaseLocusKind base_locus(const Surface& s, const DivisorClass& d) {
    if (is_zero(d.coords)) throw Error("base_locus: class is zero");
    if (!s.is_nef(d)) throw Error("base_locus: class is not nef");

    if (s.kind() == SurfaceKind::WeakDelPezzo) {
        // the only non-free case is -K on a degree-one surface
        if (s.k_squared() == 1 && d == s.minus_k())
            return BaseLocusKind{BaseLocusTag::SinglePoint, std::nullopt};
        return BaseLocusKind{BaseLocusTag::Free, std::nullopt};
    }

    Int kd = s.pair(s.minus_k(), d);
    if (kd == 0) {
        auto a = anticanonical_multiple(s, d);
        if (!a || *a <= 0)
            throw Error("base_locus: nef class orthogonal to K is not a positive "
                        "multiple of -K");
        if (s.index() == 1 || *a % s.index() == 0)
            return BaseLocusKind{BaseLocusTag::Free, std::nullopt};
        return BaseLocusKind{BaseLocusTag::Curve, s.minus_k()};
    }
    if (kd == 1) {
        // D ~ -aK + E: recover E = D + (s+1)K with s = (D^2-1)/2
        Int d2 = self_intersection(s.lattice(), d);
        if (d2 % 2 == 0) throw Error("base_locus: parity violation");
        Int sdeg = (d2 - 1) / 2;
        Vec r = add(d.coords, scale(sdeg + 1, s.lattice().canonical.coords));
        DivisorClass rc = s.lattice().cls(std::move(r));
        const auto& m1 = s.minus_one();
        if (std::find(m1.begin(), m1.end(), rc) == m1.end())
            throw Error("base_locus: residual (-1)-class (" + to_string(rc.coords) +
                        ") is not a listed (-1)-curve; model inconsistent");
        if (s.index() == 1) return BaseLocusKind{BaseLocusTag::Curve, rc};
        return BaseLocusKind{BaseLocusTag::SinglePoint, std::nullopt};
    }
    return BaseLocusKind{BaseLocusTag::Free, std::nullopt};
}

}  // namespace nefcox
