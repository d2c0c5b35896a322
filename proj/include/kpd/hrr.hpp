#ifndef KPD_HRR_HPP
#define KPD_HRR_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "kpd/errors.hpp"
#include "kpd/ktheory.hpp"
#include "kpd/rational.hpp"
#include "kpd/resolutions.hpp"
#include "kpd/series.hpp"
#include "kpd/unipoly.hpp"

namespace kpd {

// Chern character series: rank + sum_{k>=1} ch_k x^k. The constant term is
// the rank.
using CharSeries = TruncatedSeries<Rational>;

// Truncation of (x / (1 - e^{-x}))^{d+1}. Multiplying a Chern character by
// this and reading the x^d coefficient yields the Euler characteristic.
using ToddFactor = TruncatedSeries<Rational>;

// Chern character from Chern coefficients via Newton's identities. Writing
// C(x) = 1 + sum c_i x^i with c_i the elementary symmetric functions of the
// formal roots, the power sums satisfy
//   p_k = sum_{i=1..k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k,
// and ch = rank + sum_k p_k x^k / k!. No root factorization is ever needed.
inline CharSeries chern_character(const ChernRank& c) {
    const int d = c.dim();
    const TruncatedSeries<Rational>& cp = c.chern();
    std::vector<Rational> p(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int k = 1; k <= d; ++k) {
        Rational acc = Rational(k) * cp[k];
        if (k % 2 == 0) acc = -acc;
        for (int i = 1; i < k; ++i) {
            Rational term = cp[i] * p[static_cast<std::size_t>(k - i)];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        p[static_cast<std::size_t>(k)] = acc;
    }
    std::vector<Rational> ch(static_cast<std::size_t>(d) + 1, Rational(0));
    ch[0] = Rational(c.rank());
    for (int k = 1; k <= d; ++k)
        ch[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] / Rational(factorial(static_cast<unsigned long>(k)));
    return CharSeries(d, std::move(ch));
}

// Chern character straight from a K-class: sum_m n_m e^{-m x}.
inline CharSeries char_from_class(const KClass& cls) {
    const int d = cls.dim();
    std::vector<Rational> ch(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int m = 0; m <= d; ++m) {
        const Int& nm = cls.coeff(m);
        if (nm == 0) continue;
        Int mk(1);
        for (int k = 0; k <= d; ++k) {
            ch[static_cast<std::size_t>(k)] += Rational(nm * mk, factorial(static_cast<unsigned long>(k)));
            mk *= -m;
        }
    }
    return CharSeries(d, std::move(ch));
}

// (x / (1 - e^{-x}))^{d+1} truncated at degree d: the inverse of
// q(x) = sum_{k>=0} (-1)^k x^k / (k+1)!, raised to the (d+1)-st power.
// Cached per dimension.
inline ToddFactor todd_factor(int dim) {
    if (dim < 0) throw DimensionMismatch("negative dimension");
    static std::map<int, ToddFactor> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(dim);
    if (it != cache.end()) return it->second;
    std::vector<Rational> q(static_cast<std::size_t>(dim) + 1, Rational(0));
    for (int k = 0; k <= dim; ++k) {
        Rational v(Int(1), factorial(static_cast<unsigned long>(k) + 1));
        q[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
    }
    ToddFactor todd = TruncatedSeries<Rational>(dim, std::move(q)).inverse().pow(dim + 1);
    cache.emplace(dim, todd);
    return todd;
}

// The Riemann-Roch functional: coefficient of x^d in s * todd. Linear in s;
// works over any coefficient domain reachable from rationals.
template <typename C>
C phi(const TruncatedSeries<C>& s, int dim) {
    if (s.bound() != dim)
        throw DimensionMismatch("series bound " + std::to_string(s.bound()) +
                                " does not match dimension " + std::to_string(dim));
    return (s * convert_series<C>(todd_factor(dim))).coeff(dim);
}

// e^{t x} with polynomial coefficients: the x^k coefficient is t^k / k!.
inline TruncatedSeries<UniPoly> exp_tx(int dim) {
    if (dim < 0) throw DimensionMismatch("negative dimension");
    static std::map<int, TruncatedSeries<UniPoly>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(dim);
    if (it != cache.end()) return it->second;
    std::vector<UniPoly> e;
    e.reserve(static_cast<std::size_t>(dim) + 1);
    for (int k = 0; k <= dim; ++k)
        e.push_back(UniPoly::monomial(Rational(Int(1), factorial(static_cast<unsigned long>(k))), k));
    TruncatedSeries<UniPoly> s(dim, std::move(e));
    cache.emplace(dim, s);
    return s;
}

// Hilbert polynomial from Chern data: Phi(e^{tx} ch), computed in the
// polynomial coefficient domain. Degree at most d by construction.
inline UniPoly hilbert_from_chern(const ChernRank& c) {
    const int d = c.dim();
    const TruncatedSeries<UniPoly> product =
        exp_tx(d) * convert_series<UniPoly>(chern_character(c));
    return phi(product, d);
}

// Chern data from a Hilbert polynomial: integer coordinates a_l in the
// subspace basis give C(x) = prod_l C_{S_l}(x)^{a_l} mod x^{d+1}; only the
// l = 0 factor carries rank, so the rank is a_0.
inline ChernRank chern_from_hilbert(const UniPoly& p, int dim) {
    const SlCombo combo = poly_to_combo(p, dim);
    TruncatedSeries<Rational> chern = TruncatedSeries<Rational>::one(dim);
    for (int l = 1; l <= dim; ++l) {
        const Int& al = combo.a[static_cast<std::size_t>(l)];
        if (al == 0) continue;
        chern = chern * sl_chern(l, dim).pow(detail::to_long(al));
    }
    return ChernRank(std::move(chern), combo.a[0]);
}

// Hilbert polynomial assembled termwise from Todd coefficients a_i and Chern
// characters: the t^{d-k} coefficient is (sum_{i=0..k} a_i ch_{k-i}) / (d-k)!
// with ch_0 = rank. Same value as hilbert_from_chern by a different route.
inline UniPoly hilbert_termwise(const ChernRank& c) {
    const int d = c.dim();
    const CharSeries ch = chern_character(c);
    const ToddFactor a = todd_factor(d);
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int k = 0; k <= d; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i) acc += a[i] * ch[k - i];
        coeffs[static_cast<std::size_t>(d - k)] = acc / Rational(factorial(static_cast<unsigned long>(d - k)));
    }
    return UniPoly(std::move(coeffs));
}

} // namespace kpd

#endif // KPD_HRR_HPP
