#include <doctest.h>

#include <random>

#include "nefcox/linalg.hpp"

using namespace nefcox;

namespace {

Mat rand_mat(std::mt19937& rng, std::size_t n, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(n, Vec(n));
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

}  // namespace

TEST_CASE("determinant on small knowns") {
    CHECK(det({{2}}) == 2);
    CHECK(det({{1, 2}, {3, 4}}) == -2);
    CHECK(det({{0, 1}, {1, 0}}) == -1);
    CHECK(det({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
    CHECK(det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("determinant is multiplicative (random)") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        Mat a = rand_mat(rng, 4), b = rand_mat(rng, 4);
        CHECK(det(mat_mul(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("column Hermite form solves and spans") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        Mat m = rand_mat(rng, 4);
        auto [h, v] = hnf_columns(m);
        CHECK(mat_mul(m, v) == h);
        Int dv = det(v);
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("solve_integral finds known solutions and rejects impossible ones") {
    Mat m = {{2, 0}, {0, 3}};
    auto x = solve_integral(m, {4, 9});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{2, 3});
    CHECK_FALSE(solve_integral(m, {1, 0}).has_value());
    CHECK_FALSE(solve_integral(m, {0, 1}).has_value());

    // random consistency: M*(random x) is always solvable, and M*sol == rhs
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 60; ++t) {
        Mat a = rand_mat(rng, 3);
        Vec x0 = {d(rng), d(rng), d(rng)};
        Vec rhs = mat_vec(a, x0);
        auto sol = solve_integral(a, rhs);
        REQUIRE(sol.has_value());
        CHECK(mat_vec(a, *sol) == rhs);
    }
}

TEST_CASE("integral kernel is saturated and annihilates") {
    Mat m = {{1, 1, 1}};
    auto ker = integral_kernel(m);
    CHECK(ker.size() == 2);
    for (const auto& k : ker) CHECK(dot(m[0], k) == 0);

    // kernel of [2 4] must contain (2,-1), not only (4,-2)
    auto k2 = integral_kernel({{2, 4}});
    REQUIRE(k2.size() == 1);
    CHECK(gcd_of(k2[0]) == 1);
}

TEST_CASE("smith normal form gives group invariants") {
    // Z^2 / [[2,0],[0,4]] has order 8
    SmithResult s = smith({{2, 0}, {0, 4}});
    Int prod = 1;
    for (const auto& d : s.diag) prod *= d;
    CHECK(prod == 8);

    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        Mat m = rand_mat(rng, 3);
        Int dm = det(m);
        if (dm == 0) continue;
        SmithResult r = smith(m);
        Int p = 1;
        for (const auto& d : r.diag) p *= d;
        CHECK(p == boost::multiprecision::abs(dm));
        CHECK((det(r.uinv) == 1 || det(r.uinv) == -1));
    }
}

TEST_CASE("symmetric inertia: known forms") {
    Inertia i1 = symmetric_inertia({{1, 0}, {0, -1}});
    CHECK(i1.pos == 1);
    CHECK(i1.neg == 1);
    CHECK(i1.zero == 0);

    // hyperbolic plane: zero diagonal, off-diagonal 1
    Inertia i2 = symmetric_inertia({{0, 1}, {1, 0}});
    CHECK(i2.pos == 1);
    CHECK(i2.neg == 1);

    Mat a3 = {{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}};
    Inertia i3 = symmetric_inertia(a3);
    CHECK(i3.neg == 3);
    CHECK(i3.pos == 0);

    Inertia i4 = symmetric_inertia({{0, 0}, {0, 0}});
    CHECK(i4.zero == 2);
}

TEST_CASE("inertia is congruence-invariant (random)") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        Mat a = rand_mat(rng, 4);
        Mat sym(4, Vec(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sym[i][j] = a[i][j] + a[j][i];
        Mat u = rand_mat(rng, 4);
        if (det(u) == 0) continue;
        Mat cong = mat_mul(mat_mul(transpose(u), sym), u);
        Inertia x = symmetric_inertia(sym), y = symmetric_inertia(cong);
        CHECK(x.pos == y.pos);
        CHECK(x.neg == y.neg);
        CHECK(x.zero == y.zero);
    }
}

TEST_CASE("unimodular inverse") {
    Mat m = {{1, 2}, {0, 1}};
    Mat inv = unimodular_inverse(m);
    CHECK(mat_mul(m, inv) == identity(2));
    CHECK_THROWS_AS(unimodular_inverse(Mat{{2, 0}, {0, 1}}), Error);
}
