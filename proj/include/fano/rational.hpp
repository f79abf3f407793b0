#ifndef FANO_RATIONAL_HPP
#define FANO_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <stdexcept>
#include <vector>

namespace fano {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;

inline Int num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

/// Clears denominators and divides out the content. Zero vectors stay zero.
inline ZVec primitive(const QVec& v) {
    Int l = 1;
    for (const Rat& q : v) l = boost::multiprecision::lcm(l, den(q));
    ZVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (l / den(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline ZVec primitive(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    ZVec w = v;
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline QVec to_rational(const ZVec& v) {
    QVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
    return w;
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const QVec& v) {
    for (const Rat& q : v)
        if (q != 0) return false;
    return true;
}

inline bool is_zero(const ZVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace fano

#endif
