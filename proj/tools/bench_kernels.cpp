// Times the serial kernels against their OpenMP twins on the built-in
// surfaces: parallelepiped sweep behind the Hilbert basis and the
// (-1)-curve profile solve.

#include <chrono>
#include <cstdio>

#include "nefcox/presets.hpp"

using namespace nefcox;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_surface(const std::string& name) {
    Surface s(preset(name));
    std::printf("== %s\n", name.c_str());

    if (s.kind() == SurfaceKind::Elliptic) {
        auto profiles = minus_one_profiles(s);
        auto t0 = Clock::now();
        auto serial = minus_one_from_profiles_serial(s, profiles);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto par = minus_one_from_profiles_parallel(s, profiles, 0);
        double tp = seconds_since(t0);
        std::printf("  minus-one sweep: %zu profiles -> %zu curves | serial %.4fs, "
                    "parallel %.4fs%s\n",
                    profiles.size(), serial.size(), ts, tp,
                    serial == par ? "" : "  MISMATCH");
    }

    RationalCone nef = nef_cone(s);
    auto tri = pull_triangulation(nef.ambient, nef.rays);
    auto t0 = Clock::now();
    auto cand_s = hilbert_candidates_serial(nef, tri);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto cand_p = hilbert_candidates_parallel(nef, tri, 0);
    double tp = seconds_since(t0);
    std::printf("  hilbert candidates: %zu rays, %zu simplices -> %zu points | serial "
                "%.4fs, parallel %.4fs%s\n",
                nef.rays.size(), tri.size(), cand_s.size(), ts, tp,
                cand_s == cand_p ? "" : "  MISMATCH");

    t0 = Clock::now();
    auto hb = hilbert_basis(nef, 0);
    std::printf("  hilbert basis: %zu elements in %.4fs\n", hb.elements.size(),
                seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) bench_surface(argv[i]);
        return 0;
    }
    for (const auto& n : preset_names()) bench_surface(n);
    return 0;
}
