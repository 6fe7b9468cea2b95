#pragma once

#include <optional>
#include <utility>

#include "nefcox/ints.hpp"

namespace nefcox {

// Row-major integer matrix.
using Mat = std::vector<Vec>;

Mat identity(std::size_t n);
Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);

// Exact determinant (Bareiss fraction-free elimination).
Int det(Mat m);

std::size_t rank(Mat m);
std::size_t rank_of_span(const std::vector<Vec>& vecs);

// Column-style Hermite form: returns (H, V) with H = M*V, V unimodular and
// H in column echelon form (pivots positive, zero columns last).
std::pair<Mat, Mat> hnf_columns(Mat m);

// One integral solution of M*x = t, if any.
std::optional<Vec> solve_integral(const Mat& m, const Vec& t);

// Factored form of M for repeated integral solves against many right sides.
class HnfSolver {
public:
    explicit HnfSolver(Mat m);
    std::optional<Vec> solve(const Vec& t) const;

private:
    Mat h_, v_;
    std::size_t rows_ = 0, cols_ = 0;
};

// Basis of the saturated lattice {x : M*x = 0}.
std::vector<Vec> integral_kernel(const Mat& m);

// Smith form: U*M*V = diag(d1..dr, 0..). Returns diagonal entries together
// with Uinv so that column representatives of Z^n / M*Z^n are Uinv * y.
struct SmithResult {
    Vec diag;   // length = min(rows, cols), trailing zeros allowed
    Mat uinv;   // rows x rows
};
SmithResult smith(Mat m);

// Inertia of a symmetric matrix over Q via congruence diagonalization:
// (positives, negatives, zeros).
struct Inertia {
    int pos = 0, neg = 0, zero = 0;
};
Inertia symmetric_inertia(const Mat& m);

// Inverse of a unimodular integer matrix (throws if |det| != 1).
Mat unimodular_inverse(const Mat& m);

}  // namespace nefcox
