#include "nefcox/linalg.hpp"

#include <algorithm>

namespace nefcox {

Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), p = b[0].size();
    Mat r(n, Vec(p, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw Error("mat_mul: shape mismatch");
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    }
    return r;
}

Int det(Mat m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    for (auto& row : m)
        if (row.size() != n) throw Error("det: matrix not square");
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::size_t rank(Mat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Int a = m[r][c], b = m[i][c];
            Int g = boost::multiprecision::gcd(a, b);
            Int fa = a / g, fb = b / g;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] * fa - m[r][j] * fb;
        }
        ++r;
    }
    return r;
}

std::size_t rank_of_span(const std::vector<Vec>& vecs) {
    if (vecs.empty()) return 0;
    return rank(vecs);
}

std::pair<Mat, Mat> hnf_columns(Mat m) {
    if (m.empty()) return {m, Mat{}};
    std::size_t rows = m.size(), cols = m[0].size();
    Mat v = identity(cols);
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
        // column dst -= f * column src
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= f * m[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] -= f * v[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
    };
    auto col_negate = [&](std::size_t c) {
        for (std::size_t i = 0; i < rows; ++i) m[i][c] = -m[i][c];
        for (std::size_t i = 0; i < cols; ++i) v[i][c] = -v[i][c];
    };

    std::size_t c0 = 0;
    for (std::size_t r = 0; r < rows && c0 < cols; ++r) {
        // Euclid across columns c0..cols-1 on row r.
        for (;;) {
            std::size_t piv = cols;
            for (std::size_t c = c0; c < cols; ++c)
                if (m[r][c] != 0 &&
                    (piv == cols ||
                     boost::multiprecision::abs(m[r][c]) <
                         boost::multiprecision::abs(m[r][piv])))
                    piv = c;
            if (piv == cols) break;  // row r zero on the right block
            if (piv != c0) col_swap(piv, c0);
            if (m[r][c0] < 0) col_negate(c0);
            bool cleared = true;
            for (std::size_t c = c0 + 1; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                Int f = floor_div(m[r][c], m[r][c0]);
                col_axpy(c, c0, f);
                if (m[r][c] != 0) cleared = false;
            }
            if (cleared) {
                // reduce the columns left of the pivot
                for (std::size_t c = 0; c < c0; ++c) {
                    Int f = floor_div(m[r][c], m[r][c0]);
                    if (f != 0) col_axpy(c, c0, f);
                }
                ++c0;
                break;
            }
        }
    }
    return {m, v};
}

HnfSolver::HnfSolver(Mat m) {
    rows_ = m.size();
    cols_ = rows_ ? m[0].size() : 0;
    auto [h, v] = hnf_columns(std::move(m));
    h_ = std::move(h);
    v_ = std::move(v);
}

std::optional<Vec> HnfSolver::solve(const Vec& t) const {
    if (rows_ == 0) {
        if (!is_zero(t)) return std::nullopt;
        return Vec{};
    }
    if (t.size() != rows_) throw Error("solve_integral: rhs size mismatch");
    Vec y(cols_, 0);
    Vec rem = t;
    std::size_t c = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (c < cols_ && h_[r][c] != 0) {
            if (rem[r] % h_[r][c] != 0) return std::nullopt;
            Int f = rem[r] / h_[r][c];
            y[c] = f;
            for (std::size_t i = r; i < rows_; ++i) rem[i] -= f * h_[i][c];
            ++c;
        } else if (rem[r] != 0) {
            return std::nullopt;
        }
    }
    // x = V * y
    Vec x(cols_, 0);
    for (std::size_t i = 0; i < cols_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) x[i] += v_[i][j] * y[j];
    return x;
}

std::optional<Vec> solve_integral(const Mat& m, const Vec& t) {
    if (m.empty()) {
        if (!is_zero(t)) return std::nullopt;
        return Vec{};
    }
    return HnfSolver(m).solve(t);
}

std::vector<Vec> integral_kernel(const Mat& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto [h, v] = hnf_columns(m);
    std::vector<Vec> ker;
    for (std::size_t c = 0; c < cols; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < m.size(); ++r)
            if (h[r][c] != 0) { zero = false; break; }
        if (!zero) continue;
        Vec col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = v[i][c];
        ker.push_back(std::move(col));
    }
    return ker;
}

SmithResult smith(Mat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    Mat uinv = identity(rows);
    // Row op on m: also apply the inverse op to uinv columns so that
    // uinv * (current m) stays equal to the original matrix.
    auto row_swap = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(uinv[i][a], uinv[i][b]);
    };
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
        // m.row(dst) -= f * m.row(src)  =>  uinv.col(src) += f * uinv.col(dst)
        for (std::size_t j = 0; j < cols; ++j) m[dst][j] -= f * m[src][j];
        for (std::size_t i = 0; i < rows; ++i) uinv[i][src] += f * uinv[i][dst];
    };
    auto row_negate = [&](std::size_t r) {
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (std::size_t i = 0; i < rows; ++i) uinv[i][r] = -uinv[i][r];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= f * m[i][src];
    };

    std::size_t n = std::min(rows, cols);
    for (std::size_t k = 0; k < n; ++k) {
        // find smallest nonzero entry in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi == rows || boost::multiprecision::abs(m[i][j]) <
                                       boost::multiprecision::abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        if (pi != k) row_swap(pi, k);
        if (pj != k) col_swap(pj, k);
        if (m[k][k] < 0) row_negate(k);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (m[i][k] == 0) continue;
                Int f = floor_div(m[i][k], m[k][k]);
                row_axpy(i, k, f);
                if (m[i][k] != 0) {
                    row_swap(i, k);
                    dirty = true;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (m[k][j] == 0) continue;
                Int f = floor_div(m[k][j], m[k][k]);
                col_axpy(j, k, f);
                if (m[k][j] != 0) {
                    col_swap(j, k);
                    dirty = true;
                }
            }
        }
    }
    SmithResult res;
    res.diag.resize(n);
    for (std::size_t k = 0; k < n; ++k) res.diag[k] = m[k][k];
    res.uinv = std::move(uinv);
    return res;
}

Inertia symmetric_inertia(const Mat& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i]) throw Error("symmetric_inertia: matrix not symmetric");
            a[i][j] = Rat(m[i][j]);
        }
    Inertia out;
    auto sym_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto sym_add = [&](std::size_t i, std::size_t j, const Rat& f) {
        // row_i += f*row_j, then col_i += f*col_j (congruence)
        for (std::size_t c = 0; c < n; ++c) a[i][c] += f * a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][i] += f * a[r][j];
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t d = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (a[j][j] != 0) { d = j; break; }
            if (d < n) {
                sym_swap(k, d);
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (a[k][j] != 0) { off = j; break; }
                if (off == n) {
                    // row k is zero within the block: radical direction
                    ++out.zero;
                    continue;
                }
                sym_add(k, off, Rat(1));  // makes a[k][k] = 2*a[k][off]
            }
        }
        if (a[k][k] == 0) { ++out.zero; continue; }
        if (a[k][k] > 0) ++out.pos; else ++out.neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = -a[i][k] / a[k][k];
            sym_add(i, k, f);
        }
    }
    return out;
}

Mat unimodular_inverse(const Mat& m) {
    std::size_t n = m.size();
    Int d = det(m);
    if (d != 1 && d != -1) throw Error("unimodular_inverse: |det| != 1");
    // Solve m * x = e_i over the integers, column by column.
    Mat inv(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        auto x = solve_integral(m, e);
        if (!x) throw Error("unimodular_inverse: inconsistent solve");
        for (std::size_t r = 0; r < n; ++r) inv[r][i] = (*x)[r];
    }
    return inv;
}

}  // namespace nefcox
