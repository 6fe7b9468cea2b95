#include <doctest.h>

#include <random>
#include <set>

#include "nefcox/presets.hpp"

using namespace nefcox;

namespace {

Vec coeffs(std::initializer_list<long long> v) {
    Vec out;
    for (long long x : v) out.emplace_back(x);
    return out;
}

// brute-force oracle: all (a; b1..b8) with E^2 = -1, K.E = -1 on a blow-up
// of P^2 in eight points (no (-2)-constraints)
long brute_count_dp8_lines() {
    long count = 0;
    for (long a = 0; a <= 6; ++a) {
        Vec b(8, 0);
        std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long sum,
                                                               long sq) {
            if (sq > a * a + 1) return;
            if (i == 8) {
                if (sum == 3 * a - 1 && sq == a * a + 1) ++count;
                return;
            }
            for (long v = -(a + 1); v <= a + 1; ++v) {
                b[i] = v;
                rec(i + 1, sum + v, sq + v * v);
            }
        };
        rec(0, 0, 0);
    }
    return count;
}

}  // namespace

TEST_CASE("all presets validate") {
    for (const auto& name : preset_names()) {
        SurfaceModel m = preset(name);
        auto issues = validate_model(m);
        CHECK_MESSAGE(issues.empty(), name, ": ", issues.empty() ? "" : issues.front());
    }
    CHECK_THROWS_AS(preset("no-such-surface"), Error);
}

TEST_CASE("validate_model flags a wrong (-2)-curve") {
    SurfaceModel m = preset("halphen-e8-m2");
    m.minus_two.push_back(m.lattice.cls(coeffs({1, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
    auto issues = validate_model(m);
    bool flagged = false;
    for (const auto& s : issues) flagged |= s.find("square") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("minus-one enumeration: 2-Halphen II* surface") {
    Surface s(preset("halphen-e8-m2"));
    auto m1 = s.minus_one();
    REQUIRE(m1.size() == 3);
    std::set<Vec> got;
    for (const auto& e : m1) got.insert(e.coords);
    std::set<Vec> expect = {
        coeffs({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}),     // E1
        coeffs({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),     // Eq
        coeffs({1, 0, 0, 0, 0, 0, 0, 0, -1, -1}),   // H - E8 - Eq
    };
    CHECK(got == expect);
    CHECK(s.negative_curves().size() == 12);

    // enumeration is idempotent and order-deterministic
    auto again = enumerate_minus_one(s);
    CHECK(again == m1);
}

TEST_CASE("minus-one enumeration: index one and index three") {
    Surface m1s(preset("halphen-e8-m1"));
    CHECK(m1s.minus_one().size() == 1);
    CHECK(m1s.negative_curves().size() == 10);

    Surface m3s(preset("halphen-e8-m3"));
    auto m1 = m3s.minus_one();
    CHECK(m1.size() == 5);
    CHECK(m3s.negative_curves().size() == 14);
    // derived by hand from the fiber profile (R3 = 1, everything else 0)
    DivisorClass line = m3s.lattice().cls(coeffs({1, 0, 0, 0, -1, -1, 0, 0, 0, 0}));
    CHECK(std::find(m1.begin(), m1.end(), line) != m1.end());
    // E1 and F1 are always present
    CHECK(std::find(m1.begin(), m1.end(),
                    m3s.lattice().cls(coeffs({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}))) != m1.end());
    CHECK(std::find(m1.begin(), m1.end(),
                    m3s.lattice().cls(coeffs({0, 0, 0, 0, 0, 0, 1, 0, 0, 0}))) != m1.end());
}

TEST_CASE("minus-one enumeration: degree-one del Pezzo has 240 classes") {
    SurfaceModel m;
    m.lattice = blowup_lattice(8);
    m.kind = SurfaceKind::WeakDelPezzo;
    m.name = "dp1";
    Surface s(std::move(m));
    auto lines = s.minus_one();
    CHECK(lines.size() == 240);
    CHECK(brute_count_dp8_lines() == 240);
    for (const auto& e : lines) {
        CHECK(self_intersection(s.lattice(), e) == -1);
        CHECK(pairing(s.lattice(), e, s.lattice().canonical) == -1);
    }
}

TEST_CASE("minus-one enumeration: E6 cubic has exactly one (-1)-curve") {
    Surface s(preset("wdp-e6-cubic"));
    auto m1 = s.minus_one();
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].coords == coeffs({0, 0, 0, 0, 0, 0, 1}));
    CHECK(s.negative_curves().size() == 7);
}

TEST_CASE("non-extremal elliptic input is rejected") {
    SurfaceModel m = preset("halphen-e8-m2");
    m.minus_two.pop_back();  // drop T: the (-2)-classes no longer span rank 9
    Surface s(std::move(m));
    CHECK_THROWS_WITH_AS(s.minus_one(), doctest::Contains("not certified"), Error);
}

TEST_CASE("is_nef and is_ample") {
    Surface s(preset("halphen-e8-m2"));
    CHECK(s.is_nef(s.minus_k()));
    CHECK_FALSE(s.is_ample(s.minus_k()));  // K^2 = 0
    DivisorClass e1 = s.lattice().cls(coeffs({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(s.is_nef(e1));
    DivisorClass c3 = s.lattice().cls(coeffs({1, 0, 0, 0, 0, 0, 0, 0, 0, -1}));
    CHECK(s.is_nef(c3));
    DivisorClass c1 =
        s.lattice().cls(coeffs({5, -1, -1, -1, -1, -1, -1, -1, -1, -4}));
    CHECK(s.is_nef(c1));
    CHECK_FALSE(s.is_ample(c1));  // orthogonal to the fiber components

    SurfaceModel dp;
    dp.lattice = blowup_lattice(6);
    dp.kind = SurfaceKind::WeakDelPezzo;
    dp.name = "dp3-general";
    Surface cubic(std::move(dp));
    CHECK(cubic.is_ample(cubic.minus_k()));
}

TEST_CASE("fiber structure of the II* surfaces") {
    Surface m1(preset("halphen-e8-m1"));
    const auto& f1 = m1.fibers();
    REQUIRE(f1.components.size() == 1);
    CHECK(f1.components[0].full_fiber);
    CHECK(f1.components[0].canonical_multiple == 1);
    // order: G1..G8, L
    CHECK(f1.components[0].multiplicities ==
          coeffs({1, 2, 3, 4, 5, 6, 4, 2, 3}));

    Surface m2(preset("halphen-e8-m2"));
    const auto& f2 = m2.fibers();
    REQUIRE(f2.components.size() == 1);
    CHECK(f2.components[0].full_fiber);
    CHECK(f2.components[0].canonical_multiple == 2);
    // order: G1..G7, L, T; the exact multiplicity vector of the II* fiber
    CHECK(f2.components[0].multiplicities ==
          coeffs({2, 3, 4, 5, 6, 4, 2, 3, 1}));

    // fiber orthogonality: sum(n_i G_i) . G = 0 for every member G
    for (const Surface* s : {&m1, &m2}) {
        for (const auto& comp : s->fibers().components) {
            Vec fiber(s->lattice().rank, 0);
            for (std::size_t i = 0; i < comp.members.size(); ++i)
                fiber = add(fiber, scale(comp.multiplicities[i],
                                         s->minus_two()[comp.members[i]].coords));
            for (std::size_t i : comp.members)
                CHECK(pairing(s->lattice(), s->lattice().cls(fiber),
                              s->minus_two()[i]) == 0);
        }
    }
}

TEST_CASE("fiber structure of the remaining Halphen presets") {
    Surface d8(preset("halphen-d8-m2"));
    REQUIRE(d8.fibers().components.size() == 1);
    CHECK(d8.fibers().components[0].full_fiber);
    // order: R1,R2,S1,S2,T1,L1,L2,L3,L4
    CHECK(d8.fibers().components[0].multiplicities ==
          coeffs({1, 2, 2, 2, 1, 2, 2, 1, 1}));

    Surface e7(preset("halphen-e7a1-m2"));
    REQUIRE(e7.fibers().components.size() == 2);
    for (const auto& comp : e7.fibers().components) {
        CHECK(comp.full_fiber);
        CHECK(comp.canonical_multiple == 2);
    }

    Surface a8(preset("halphen-a8-m2"));
    REQUIRE(a8.fibers().components.size() == 1);
    CHECK(a8.fibers().components[0].full_fiber);
    CHECK(a8.fibers().components[0].multiplicities == Vec(9, Int(1)));

    SurfaceModel bare = preset("halphen-e8-m2");
    bare.minus_two.clear();
    bare.minus_one = std::vector<DivisorClass>{};
    Surface empty(std::move(bare));
    CHECK(empty.fibers().components.empty());
}

TEST_CASE("anticanonical irreducibility") {
    CHECK_FALSE(Surface(preset("halphen-e8-m1")).anticanonical_irreducible());
    CHECK(Surface(preset("halphen-e8-m2")).anticanonical_irreducible());
    CHECK(Surface(preset("halphen-e8-m3")).anticanonical_irreducible());
    CHECK(Surface(preset("halphen-e7a1-m2")).anticanonical_irreducible());
    CHECK(Surface(preset("halphen-a8-m2")).anticanonical_irreducible());

    SurfaceModel bare = preset("halphen-e8-m2");
    bare.minus_two.clear();
    bare.minus_one = std::vector<DivisorClass>{};
    CHECK(Surface(std::move(bare)).anticanonical_irreducible());
}

TEST_CASE("contract: the stated image and the pairing identity") {
    Surface s(preset("halphen-e8-m2"));
    DivisorClass eq = s.lattice().cls(coeffs({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    Contraction con = contract(s, eq);
    CHECK(con.surface.k_squared() == 1);
    CHECK(con.surface.kind() == SurfaceKind::WeakDelPezzo);
    CHECK(validate_model(con.surface.model()).empty());

    // phi(L_pq) = H - E8 because L_pq.Eq = 1
    DivisorClass lpq = s.lattice().cls(coeffs({1, 0, 0, 0, 0, 0, 0, 0, -1, -1}));
    DivisorClass he8 = s.lattice().cls(coeffs({1, 0, 0, 0, 0, 0, 0, 0, -1, 0}));
    CHECK(con.pushforward(s.lattice(), lpq) == con.pushforward(s.lattice(), he8));

    // phi(C).phi(C') = C.C' + (C.E)(C'.E) on random pairs
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 120; ++t) {
        Vec a(10), b(10);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        auto ca = s.lattice().cls(a), cb = s.lattice().cls(b);
        Int lhs = pairing(con.surface.lattice(), con.pushforward(s.lattice(), ca),
                          con.pushforward(s.lattice(), cb));
        Int rhs = s.pair(ca, cb) + s.pair(ca, eq) * s.pair(cb, eq);
        CHECK(lhs == rhs);
    }

    // contracting the unique (-1)-curve of the index-one surface
    Surface j(preset("halphen-e8-m1"));
    Contraction cj = contract(j, j.minus_one().front());
    CHECK(cj.surface.k_squared() == 1);
    CHECK(cj.surface.minus_two().size() == 8);

    // contracting something that is not a listed (-1)-curve
    CHECK_THROWS_AS(contract(s, s.minus_k()), Error);
}

TEST_CASE("contract preserves curve lists faithfully on all presets") {
    for (const auto& name : preset_names()) {
        Surface s(preset(name));
        if (s.minus_one().empty()) continue;
        Contraction con = contract(s, s.minus_one().front());
        CHECK(validate_model(con.surface.model()).empty());
        CHECK(con.surface.k_squared() == s.k_squared() + 1);
        // every image class keeps its defining numbers
        for (const auto& c : con.surface.minus_two())
            CHECK(self_intersection(con.surface.lattice(), c) == -2);
        for (const auto& c : con.surface.minus_one())
            CHECK(self_intersection(con.surface.lattice(), c) == -1);
    }
}
