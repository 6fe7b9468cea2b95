#include "nefcox/presets.hpp"

#include <algorithm>

namespace nefcox {

namespace {

// Helper for blow-up bases: a class a*H + sum over named exceptional slots.
Vec bu(std::size_t rank, long long h, std::initializer_list<std::pair<int, long long>> terms) {
    Vec v(rank, 0);
    v[0] = h;
    for (auto [slot, c] : terms) v[std::size_t(slot)] = c;
    return v;
}

// Rational elliptic surface with a II* configuration and Halphen index 1:
// nine blow-ups over one point. Basis H,E1..E9, Ei from last to first.
SurfaceModel halphen_e8_m1() {
    SurfaceModel m;
    m.lattice = blowup_lattice(9);
    m.kind = SurfaceKind::Elliptic;
    m.index = 1;
    m.name = "halphen-e8-m1";
    auto& l = m.lattice;
    for (int i = 1; i <= 8; ++i)  // G_i = E_{i+1} - E_i
        m.minus_two.push_back(l.cls(bu(10, 0, {{i, -1}, {i + 1, 1}})));
    // line through the first two infinitely near points
    m.minus_two.push_back(l.cls(bu(10, 1, {{9, -1}, {8, -1}, {7, -1}})));
    return m;
}

// 2-Halphen transform of the above. Basis H,E1..E8,Eq (Eq = slot 9).
SurfaceModel halphen_e8_m2() {
    SurfaceModel m;
    m.lattice = blowup_lattice(9, {"H", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "Eq"});
    m.kind = SurfaceKind::Elliptic;
    m.index = 2;
    m.name = "halphen-e8-m2";
    auto& l = m.lattice;
    for (int i = 1; i <= 7; ++i)  // G_i = E_{i+1} - E_i
        m.minus_two.push_back(l.cls(bu(10, 0, {{i, -1}, {i + 1, 1}})));
    // L = H - E8 - E7 - E6
    m.minus_two.push_back(l.cls(bu(10, 1, {{8, -1}, {7, -1}, {6, -1}})));
    // T = 3H - E2 - ... - E8 - 2Eq
    m.minus_two.push_back(l.cls(bu(
        10, 3, {{2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}, {9, -2}})));
    return m;
}

// 3-Halphen surface with a II* configuration (two base points: E1..E5 over
// p1 as slots 1..5, F1..F4 over p2 as slots 6..9).
SurfaceModel halphen_e8_m3() {
    SurfaceModel m;
    m.lattice = blowup_lattice(9, {"H", "E1", "E2", "E3", "E4", "E5", "F1", "F2", "F3", "F4"});
    m.kind = SurfaceKind::Elliptic;
    m.index = 3;
    m.name = "halphen-e8-m3";
    auto& l = m.lattice;
    for (int i = 1; i <= 4; ++i)  // R_i = E_{i+1} - E_i
        m.minus_two.push_back(l.cls(bu(10, 0, {{i, -1}, {i + 1, 1}})));
    for (int i = 1; i <= 3; ++i)  // S_i = F_{i+1} - F_i
        m.minus_two.push_back(l.cls(bu(10, 0, {{5 + i, -1}, {6 + i, 1}})));
    // L1 = H - E5 - F3 - F4
    m.minus_two.push_back(l.cls(bu(10, 1, {{5, -1}, {8, -1}, {9, -1}})));
    // Q = 2H - E1 - E2 - E3 - E4 - E5 - F4
    m.minus_two.push_back(
        l.cls(bu(10, 2, {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {9, -1}})));
    return m;
}

// 2-Halphen surface with a D8 configuration. Slots: E1..E3 = 1..3,
// F1..F3 = 4..6, G1..G2 = 7..8, J = 9.
SurfaceModel halphen_d8_m2() {
    SurfaceModel m;
    m.lattice = blowup_lattice(9, {"H", "E1", "E2", "E3", "F1", "F2", "F3", "G1", "G2", "J"});
    m.kind = SurfaceKind::Elliptic;
    m.index = 2;
    m.name = "halphen-d8-m2";
    auto& l = m.lattice;
    for (int i = 1; i <= 2; ++i)  // R_i = E_{i+1} - E_i
        m.minus_two.push_back(l.cls(bu(10, 0, {{i, -1}, {i + 1, 1}})));
    for (int i = 1; i <= 2; ++i)  // S_i = F_{i+1} - F_i
        m.minus_two.push_back(l.cls(bu(10, 0, {{3 + i, -1}, {4 + i, 1}})));
    // T1 = G2 - G1
    m.minus_two.push_back(l.cls(bu(10, 0, {{7, -1}, {8, 1}})));
    // L1 = H - E3 - F3 - F2
    m.minus_two.push_back(l.cls(bu(10, 1, {{3, -1}, {6, -1}, {5, -1}})));
    // L2 = H - F3 - G2 - J
    m.minus_two.push_back(l.cls(bu(10, 1, {{6, -1}, {8, -1}, {9, -1}})));
    // L3 = H - E3 - G2 - G1
    m.minus_two.push_back(l.cls(bu(10, 1, {{3, -1}, {8, -1}, {7, -1}})));
    // L4 = H - E1 - E2 - E3 (the inflection line)
    m.minus_two.push_back(l.cls(bu(10, 1, {{1, -1}, {2, -1}, {3, -1}})));
    return m;
}

// 2-Halphen surface with an E7+A1 configuration. Slots: E1..E6 = 1..6,
// F1 = 7, G1 = 8, H1 = 9.
SurfaceModel halphen_e7a1_m2() {
    SurfaceModel m;
    m.lattice = blowup_lattice(9, {"H", "E1", "E2", "E3", "E4", "E5", "E6", "F1", "G1", "H1"});
    m.kind = SurfaceKind::Elliptic;
    m.index = 2;
    m.name = "halphen-e7a1-m2";
    auto& l = m.lattice;
    for (int i = 1; i <= 5; ++i)  // R_i = E_{i+1} - E_i
        m.minus_two.push_back(l.cls(bu(10, 0, {{i, -1}, {i + 1, 1}})));
    // L1 = H - E6 - E5 - E4
    m.minus_two.push_back(l.cls(bu(10, 1, {{6, -1}, {5, -1}, {4, -1}})));
    // L2 = H - E6 - F1 - G1
    m.minus_two.push_back(l.cls(bu(10, 1, {{6, -1}, {7, -1}, {8, -1}})));
    // D = 3H - E2 - ... - E6 - F1 - G1 - 2H1 (nodal cubic, node at p1)
    m.minus_two.push_back(l.cls(
        bu(10, 3, {{2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}, {9, -2}})));
    // S1 = 3H - E1 - ... - E6 - 2G1 - H1
    m.minus_two.push_back(l.cls(bu(
        10, 3, {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {8, -2}, {9, -1}})));
    // S2 = 3H - E1 - ... - E6 - 2F1 - H1
    m.minus_two.push_back(l.cls(bu(
        10, 3, {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -2}, {9, -1}})));
    return m;
}

// 2-Halphen surface with an A8 configuration (nine-cycle of (-2)-curves).
// Slots: E1,E2 = 1,2; F1,F2 = 3,4; G1,G2 = 5,6; H1 = 7; I1 = 8; J1 = 9.
SurfaceModel halphen_a8_m2() {
    SurfaceModel m;
    m.lattice = blowup_lattice(9, {"H", "E1", "E2", "F1", "F2", "G1", "G2", "H1", "I1", "J1"});
    m.kind = SurfaceKind::Elliptic;
    m.index = 2;
    m.name = "halphen-a8-m2";
    auto& l = m.lattice;
    // R1 = E2 - E1, S1 = F2 - F1, T1 = G2 - G1
    m.minus_two.push_back(l.cls(bu(10, 0, {{1, -1}, {2, 1}})));
    m.minus_two.push_back(l.cls(bu(10, 0, {{3, -1}, {4, 1}})));
    m.minus_two.push_back(l.cls(bu(10, 0, {{5, -1}, {6, 1}})));
    // L1 = H - E1 - E2 - G2
    m.minus_two.push_back(l.cls(bu(10, 1, {{1, -1}, {2, -1}, {6, -1}})));
    // L2 = H - I1 - H1 - E2
    m.minus_two.push_back(l.cls(bu(10, 1, {{8, -1}, {7, -1}, {2, -1}})));
    // L3 = H - E2 - J1 - F2
    m.minus_two.push_back(l.cls(bu(10, 1, {{2, -1}, {9, -1}, {4, -1}})));
    // L4 = H - G2 - F2 - I1
    m.minus_two.push_back(l.cls(bu(10, 1, {{6, -1}, {4, -1}, {8, -1}})));
    // L5 = H - J1 - G1 - G2
    m.minus_two.push_back(l.cls(bu(10, 1, {{9, -1}, {5, -1}, {6, -1}})));
    // L6 = H - F1 - F2 - H1
    m.minus_two.push_back(l.cls(bu(10, 1, {{3, -1}, {4, -1}, {7, -1}})));
    return m;
}

// Resolution of the E6 cubic surface, presented in the curve basis
// E1..E6 ((-2)-curves) and E7 (the unique (-1)-curve).
SurfaceModel wdp_e6_cubic() {
    const std::size_t n = 7;
    Mat gram(n, Vec(n, 0));
    for (std::size_t i = 0; i < 6; ++i) gram[i][i] = -2;
    gram[6][6] = -1;
    auto edge = [&](int a, int b) {
        gram[a - 1][b - 1] = 1;
        gram[b - 1][a - 1] = 1;
    };
    edge(1, 3);
    edge(3, 6);
    edge(6, 2);
    edge(6, 5);
    edge(5, 4);
    edge(4, 7);
    Vec k = {-2, -3, -4, -4, -5, -6, -3};
    SurfaceModel m;
    m.lattice = make_lattice(std::move(gram), std::move(k),
                             {"E1", "E2", "E3", "E4", "E5", "E6", "E7"});
    m.kind = SurfaceKind::WeakDelPezzo;
    m.name = "wdp-e6-cubic";
    for (std::size_t i = 0; i < 6; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        m.minus_two.push_back(m.lattice.cls(std::move(v)));
    }
    return m;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"halphen-e8-m1", "halphen-e8-m2", "halphen-e8-m3", "halphen-d8-m2",
            "halphen-e7a1-m2", "halphen-a8-m2", "wdp-e6-cubic"};
}

SurfaceModel preset(const std::string& name) {
    if (name == "halphen-e8-m1") return halphen_e8_m1();
    if (name == "halphen-e8-m2") return halphen_e8_m2();
    if (name == "halphen-e8-m3") return halphen_e8_m3();
    if (name == "halphen-d8-m2") return halphen_d8_m2();
    if (name == "halphen-e7a1-m2") return halphen_e7a1_m2();
    if (name == "halphen-a8-m2") return halphen_a8_m2();
    if (name == "wdp-e6-cubic") return wdp_e6_cubic();
    std::string msg = "unknown preset '" + name + "'; available:";
    for (const auto& n : preset_names()) msg += " " + n;
    throw Error(msg);
}

}  // namespace nefcox
