#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace nefcox {

// Exact arithmetic everywhere: divisor class coordinates, Gram entries and
// every cone computation use arbitrary-precision integers (rationals where a
// pivot forces them). No floating point in the kernel.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error("dot: dimension mismatch (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + ")");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec negate(const Vec& a) { return scale(-1, a); }

inline bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline Int gcd_of(const Vec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, x);
    return g;
}

// Divide out the content; direction is preserved (a ray is not its negative).
inline Vec primitive(Vec a) {
    Int g = gcd_of(a);
    if (g > 1)
        for (Int& x : a) x /= g;
    return a;
}

inline std::string to_string(const Vec& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].str();
    }
    return s;
}

// floor(n/d) for exact integers, d > 0 assumed after normalization.
inline Int floor_div(Int n, Int d) {
    if (d < 0) { n = -n; d = -d; }
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int ceil_div(const Int& n, const Int& d) { return -floor_div(-n, d); }

inline Int floor_rat(const Rat& r) {
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

inline Int ceil_rat(const Rat& r) {
    return ceil_div(boost::multiprecision::numerator(r),
                    boost::multiprecision::denominator(r));
}

// Largest s with s*s <= n. n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt of negative value");
    if (n == 0) return 0;
    return boost::multiprecision::sqrt(n);
}

}  // namespace nefcox
