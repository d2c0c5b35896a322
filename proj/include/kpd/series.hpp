#ifndef KPD_SERIES_HPP
#define KPD_SERIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kpd/errors.hpp"
#include "kpd/rational.hpp"

namespace kpd {

// Element of C[x]/x^{bound+1}: exactly bound+1 dense coefficients, constant
// term first. Values never mutate after construction; every operation yields
// a fresh series, so sharing across threads is safe.
//
// The coefficient type C must be a commutative ring reachable from small
// integers (C(0), C(1)), with +, -, *, == and operator+=. Units, pow with
// negative exponents, log and exp additionally use unit_inverse() and
// division by Rational; the two domains used here (Rational and UniPoly)
// provide both.
template <typename C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int bound) : coeffs_(checked_size(bound), C(0)) {}

    TruncatedSeries(int bound, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != checked_size(bound))
            throw DimensionMismatch("coefficient list of length " + std::to_string(coeffs_.size()) +
                                    " does not fill a series of bound " + std::to_string(bound));
    }

    static TruncatedSeries one(int bound) { return constant(bound, C(1)); }

    static TruncatedSeries constant(int bound, const C& value) {
        TruncatedSeries s(bound);
        s.coeffs_[0] = value;
        return s;
    }

    // value * x^power, truncated away entirely when power > bound.
    static TruncatedSeries monomial(int bound, const C& value, int power) {
        TruncatedSeries s(bound);
        if (power < 0) throw IndexOutOfRange("negative monomial power");
        if (power <= bound) s.coeffs_[static_cast<std::size_t>(power)] = value;
        return s;
    }

    int bound() const { return static_cast<int>(coeffs_.size()) - 1; }

    const C& coeff(int k) const {
        if (k < 0 || k > bound())
            throw IndexOutOfRange("coefficient index " + std::to_string(k) +
                                  " outside series bound " + std::to_string(bound()));
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const C& operator[](int k) const { return coeff(k); }
    const std::vector<C>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const C& c : coeffs_)
            if (!(c == C(0))) return false;
        return true;
    }

    bool is_one() const {
        if (!(coeffs_[0] == C(1))) return false;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            if (!(coeffs_[k] == C(0))) return false;
        return true;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries r(a.bound());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = C(0) - a.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_bound(b);
        TruncatedSeries r(a.bound());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_bound(b);
        TruncatedSeries r(a.bound());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    // Truncated convolution.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_bound(b);
        const int n = a.bound();
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == C(0)) continue;
            for (int j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(const C& scalar, const TruncatedSeries& s) {
        TruncatedSeries r(s.bound());
        for (std::size_t k = 0; k < s.coeffs_.size(); ++k) r.coeffs_[k] = scalar * s.coeffs_[k];
        return r;
    }

    // Multiplicative inverse; requires an invertible constant term.
    // c'_k = -c_0^{-1} * sum_{i=1..k} c_i c'_{k-i}.
    TruncatedSeries inverse() const {
        const C inv0 = unit_inverse(coeffs_[0]);
        TruncatedSeries r(bound());
        r.coeffs_[0] = inv0;
        for (int k = 1; k <= bound(); ++k) {
            C acc(0);
            for (int i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
            r.coeffs_[k] = C(0) - inv0 * acc;
        }
        return r;
    }

    // Integer power by repeated squaring; negative exponents go through inverse().
    TruncatedSeries pow(long n) const {
        if (n < 0) {
            const TruncatedSeries inv = inverse();
            return inv.pow(-(n + 1)) * inv;
        }
        TruncatedSeries acc = one(bound());
        TruncatedSeries base = *this;
        unsigned long e = static_cast<unsigned long>(n);
        while (e != 0) {
            if (e & 1UL) acc = acc * base;
            e >>= 1UL;
            if (e != 0) base = base * base;
        }
        return acc;
    }

    // Formal logarithm of a series with constant term 1. From s·L' = s':
    // k·l_k = k·c_k - sum_{j=1..k-1} j·l_j·c_{k-j}.
    TruncatedSeries log() const {
        if (!(coeffs_[0] == C(1)))
            throw NotNormalized("log requires constant term 1");
        TruncatedSeries r(bound());
        for (int k = 1; k <= bound(); ++k) {
            C acc = C(static_cast<long>(k)) * coeffs_[k];
            for (int j = 1; j < k; ++j) acc = acc - C(static_cast<long>(j)) * r.coeffs_[j] * coeffs_[k - j];
            r.coeffs_[k] = acc / Rational(static_cast<long>(k));
        }
        return r;
    }

    // Formal exponential of a series with constant term 0. From E' = s'·E:
    // k·e_k = sum_{j=1..k} j·c_j·e_{k-j}.
    TruncatedSeries exp() const {
        if (!(coeffs_[0] == C(0)))
            throw NotNilpotent("exp requires constant term 0");
        TruncatedSeries r = one(bound());
        for (int k = 1; k <= bound(); ++k) {
            C acc(0);
            for (int j = 1; j <= k; ++j) acc += C(static_cast<long>(j)) * coeffs_[j] * r.coeffs_[k - j];
            r.coeffs_[k] = acc / Rational(static_cast<long>(k));
        }
        return r;
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    void require_same_bound(const TruncatedSeries& o) const {
        if (bound() != o.bound())
            throw DimensionMismatch("series bounds differ: " + std::to_string(bound()) +
                                    " vs " + std::to_string(o.bound()));
    }

    static std::size_t checked_size(int bound) {
        if (bound < 0) throw DimensionMismatch("series bound must be non-negative");
        return static_cast<std::size_t>(bound) + 1;
    }

    std::vector<C> coeffs_;
};

// Coefficient-wise conversion, e.g. lifting a rational series into the
// polynomial coefficient domain.
template <typename To, typename From>
TruncatedSeries<To> convert_series(const TruncatedSeries<From>& s) {
    std::vector<To> out;
    out.reserve(s.coeffs().size());
    for (const From& c : s.coeffs()) out.emplace_back(c);
    return TruncatedSeries<To>(s.bound(), std::move(out));
}

inline bool is_integral(const TruncatedSeries<Rational>& s) {
    for (const Rational& c : s.coeffs())
        if (!c.is_integer()) return false;
    return true;
}

// 1 - m*x in Q[x]/x^{bound+1}; collapses to 1 when bound == 0.
inline TruncatedSeries<Rational> one_minus_mx(int bound, const Int& m) {
    TruncatedSeries<Rational> s = TruncatedSeries<Rational>::one(bound);
    if (bound >= 1) s = s + TruncatedSeries<Rational>::monomial(bound, Rational(Int(-m)), 1);
    return s;
}

} // namespace kpd

#endif // KPD_SERIES_HPP
