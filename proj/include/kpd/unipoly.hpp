#ifndef KPD_UNIPOLY_HPP
#define KPD_UNIPOLY_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "kpd/errors.hpp"
#include "kpd/rational.hpp"

namespace kpd {

// Rational-coefficient polynomial in the single variable t, dense in the
// monomial basis. coeffs()[k] multiplies t^k; trailing zeros are never
// stored, so the zero polynomial has an empty vector and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long c) { if (c != 0) c_.emplace_back(c); }
    UniPoly(int c) : UniPoly(static_cast<long>(c)) {}
    UniPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return monomial(Rational(1), 1); }

    static UniPoly monomial(const Rational& coeff, int power) {
        if (power < 0) throw IndexOutOfRange("negative monomial power");
        if (coeff.is_zero()) return UniPoly();
        std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
        v.back() = coeff;
        return UniPoly(std::move(v));
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Zero beyond the stored degree.
    Rational coeff(int k) const {
        if (k < 0) throw IndexOutOfRange("negative coefficient index");
        if (static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& at) const {
        Rational acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
        return acc;
    }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rational> v(a.c_);
        for (Rational& x : v) x = -x;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        std::vector<Rational> v(p.c_);
        for (Rational& x : v) x *= s;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& p, const Rational& s) { return s * p; }

    friend UniPoly operator/(const UniPoly& p, const Rational& s) { return p * s.inverse(); }

    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }

    bool operator==(const UniPoly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline bool is_unit(const UniPoly& p) { return p.degree() == 0; }

inline UniPoly unit_inverse(const UniPoly& p) {
    if (p.degree() != 0) throw NotAUnit("polynomial of degree " + std::to_string(p.degree()) + " is not a unit");
    return UniPoly(p.coeff(0).inverse());
}

// binomial(t + shift, k) as a polynomial in t:
// prod_{i=1..k} (t + shift - i + 1) / k!. Degree exactly k, leading
// coefficient 1/k!. Unlike the integer convention, never identically zero.
inline UniPoly binom_poly(long shift, int k) {
    if (k < 0) throw IndexOutOfRange("binom_poly with negative lower index");
    static std::map<std::pair<long, int>, UniPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(shift, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    UniPoly p(1);
    for (int i = 1; i <= k; ++i)
        p = p * UniPoly(std::vector<Rational>{Rational(shift - i + 1), Rational(1)});
    p = p / Rational(factorial(static_cast<unsigned long>(k)));
    cache.emplace(key, p);
    return p;
}

// Integer coordinates in the basis of subspace Hilbert polynomials
// binomial(t + d - l, d - l), l = 0..d.
struct SlCombo {
    int dim = 0;
    std::vector<Int> a;

    bool operator==(const SlCombo&) const = default;
};

inline UniPoly combo_to_poly(const SlCombo& combo) {
    if (combo.a.size() != static_cast<std::size_t>(combo.dim) + 1)
        throw DimensionMismatch("combo has " + std::to_string(combo.a.size()) +
                                " entries for dimension " + std::to_string(combo.dim));
    UniPoly p;
    for (int l = 0; l <= combo.dim; ++l) {
        const Int& al = combo.a[static_cast<std::size_t>(l)];
        if (al == 0) continue;
        p += binom_poly(combo.dim - l, combo.dim - l) * Rational(al);
    }
    return p;
}

// Unique integer coordinates of p in the subspace Hilbert basis, found by
// peeling leading coefficients: a_l = (d-l)! * [t^{d-l}] remainder.
inline SlCombo poly_to_combo(const UniPoly& p, int dim) {
    if (dim < 0) throw DimensionMismatch("negative dimension");
    if (p.degree() > dim)
        throw DegreeTooHigh("degree " + std::to_string(p.degree()) +
                            " exceeds dimension " + std::to_string(dim));
    SlCombo combo{dim, std::vector<Int>(static_cast<std::size_t>(dim) + 1, Int(0))};
    UniPoly rem = p;
    for (int l = 0; l <= dim; ++l) {
        const int k = dim - l;
        const Rational al = rem.coeff(k) * Rational(factorial(static_cast<unsigned long>(k)));
        if (!al.is_integer())
            throw NotInHilbertLattice("coefficient a_" + std::to_string(l) + " = " + al.str() +
                                      " is not an integer");
        combo.a[static_cast<std::size_t>(l)] = al.as_integer();
        rem = rem - binom_poly(k, k) * al;
    }
    if (!rem.is_zero())
        throw NotInHilbertLattice("nonzero remainder after peeling");
    return combo;
}

// Coordinates of the twisted sheaf polynomial binomial(t+d-m, d):
// a_l = (-1)^l binomial(m, l).
inline SlCombo twist_to_sl_combo(long m, int dim) {
    if (m < 0) throw IndexOutOfRange("negative twist");
    if (m > dim)
        throw DegreeTooHigh("twist " + std::to_string(m) + " needs basis elements beyond dimension " +
                            std::to_string(dim));
    SlCombo combo{dim, std::vector<Int>(static_cast<std::size_t>(dim) + 1, Int(0))};
    for (int l = 0; l <= dim; ++l) {
        Int v = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(l));
        combo.a[static_cast<std::size_t>(l)] = (l % 2 == 0) ? v : Int(-v);
    }
    return combo;
}

} // namespace kpd

#endif // KPD_UNIPOLY_HPP
