#ifndef KPD_KTHEORY_HPP
#define KPD_KTHEORY_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "kpd/errors.hpp"
#include "kpd/rational.hpp"
#include "kpd/series.hpp"
#include "kpd/unipoly.hpp"

namespace kpd {

// Class in the Grothendieck group of projective d-space, written in the
// free basis [O(0)], [O(-1)], ..., [O(-d)]. coeff(m) multiplies [O(-m)].
class KClass {
public:
    KClass() = default;

    KClass(int dim, std::vector<Int> coords) : dim_(dim), n_(std::move(coords)) {
        if (dim_ < 0) throw DimensionMismatch("negative dimension");
        if (n_.size() != static_cast<std::size_t>(dim_) + 1)
            throw DimensionMismatch("class with " + std::to_string(n_.size()) +
                                    " coordinates for dimension " + std::to_string(dim_));
    }

    static KClass zero(int dim) { return KClass(dim, std::vector<Int>(checked(dim), Int(0))); }

    // [O(-m)] for 0 <= m <= dim.
    static KClass basis(int dim, int m) {
        if (m < 0 || m > dim)
            throw IndexOutOfRange("basis twist " + std::to_string(m) + " outside 0.." + std::to_string(dim));
        KClass c = zero(dim);
        c.n_[static_cast<std::size_t>(m)] = 1;
        return c;
    }

    int dim() const { return dim_; }
    const std::vector<Int>& coords() const { return n_; }

    const Int& coeff(int m) const {
        if (m < 0 || m > dim_) throw IndexOutOfRange("twist " + std::to_string(m) + " outside basis range");
        return n_[static_cast<std::size_t>(m)];
    }

    Int rank() const {
        Int r(0);
        for (const Int& v : n_) r += v;
        return r;
    }

    bool is_zero() const {
        for (const Int& v : n_)
            if (v != 0) return false;
        return true;
    }

    friend KClass operator-(const KClass& a) {
        KClass r = a;
        for (Int& v : r.n_) v = -v;
        return r;
    }

    friend KClass operator+(const KClass& a, const KClass& b) {
        a.require_same_dim(b);
        KClass r = a;
        for (std::size_t m = 0; m < r.n_.size(); ++m) r.n_[m] += b.n_[m];
        return r;
    }

    friend KClass operator-(const KClass& a, const KClass& b) { return a + (-b); }

    friend KClass operator*(const Int& s, const KClass& a) {
        KClass r = a;
        for (Int& v : r.n_) v *= s;
        return r;
    }

    bool operator==(const KClass&) const = default;

private:
    void require_same_dim(const KClass& o) const {
        if (dim_ != o.dim_)
            throw DimensionMismatch("class dimensions differ: " + std::to_string(dim_) +
                                    " vs " + std::to_string(o.dim_));
    }

    static std::size_t checked(int dim) {
        if (dim < 0) throw DimensionMismatch("negative dimension");
        return static_cast<std::size_t>(dim) + 1;
    }

    int dim_ = 0;
    std::vector<Int> n_{Int(0)};
};

// Chern polynomial paired with the rank: an element of the group
// A = A_0 x Z, composed by (f,r)+(g,s) = (f*g, r+s). The Chern part is an
// integer-coefficient unit with constant term 1, stored over rationals.
class ChernRank {
public:
    ChernRank(TruncatedSeries<Rational> chern, Int rank)
        : chern_(std::move(chern)), rank_(std::move(rank)) {
        if (!(chern_[0] == Rational(1)))
            throw NotAUnit("Chern polynomial must have constant term 1, got " + chern_[0].str());
        if (!is_integral(chern_))
            throw NotRepresentable("Chern polynomial must have integer coefficients");
    }

    static ChernRank identity(int dim) { return ChernRank(TruncatedSeries<Rational>::one(dim), Int(0)); }

    const TruncatedSeries<Rational>& chern() const { return chern_; }
    const Int& rank() const { return rank_; }
    int dim() const { return chern_.bound(); }

    friend ChernRank operator+(const ChernRank& a, const ChernRank& b) {
        return ChernRank(a.chern_ * b.chern_, a.rank_ + b.rank_);
    }

    friend ChernRank operator-(const ChernRank& a) { return ChernRank(a.chern_.inverse(), -a.rank_); }
    friend ChernRank operator-(const ChernRank& a, const ChernRank& b) { return a + (-b); }

    bool operator==(const ChernRank&) const = default;

private:
    TruncatedSeries<Rational> chern_;
    Int rank_;
};

// [O(-m)] for an arbitrary integer twist m, reduced to the basis
// [O(0)],...,[O(-d)] through the twisted Koszul relation
// sum_{i=0..d+1} (-1)^i binomial(d+1, i) [O(-s-i)] = 0.
// Reductions are memoized per (m, dim) and shared across callers.
inline KClass reduce_twist(long m, int dim) {
    if (dim < 0) throw DimensionMismatch("negative dimension");
    if (m >= 0 && m <= dim) return KClass::basis(dim, static_cast<int>(m));

    static std::map<std::pair<long, int>, KClass> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    const auto lookup = [&](long twist) -> KClass {
        if (twist >= 0 && twist <= dim) return KClass::basis(dim, static_cast<int>(twist));
        return cache.at(std::make_pair(twist, dim));
    };

    if (m > dim) {
        // X_{s+d+1} = sum_{i=0..d} (-1)^{d-i} binomial(d+1, i) X_{s+i}
        for (long k = dim + 1; k <= m; ++k) {
            const auto key = std::make_pair(k, dim);
            if (cache.count(key)) continue;
            const long s = k - dim - 1;
            KClass acc = KClass::zero(dim);
            for (int i = 0; i <= dim; ++i) {
                Int w = binomial(static_cast<unsigned long>(dim) + 1, static_cast<unsigned long>(i));
                if ((dim - i) % 2 != 0) w = -w;
                acc = acc + w * lookup(s + i);
            }
            cache.emplace(key, std::move(acc));
        }
    } else {
        // X_s = sum_{i=1..d+1} (-1)^{i+1} binomial(d+1, i) X_{s+i}
        for (long k = -1; k >= m; --k) {
            const auto key = std::make_pair(k, dim);
            if (cache.count(key)) continue;
            KClass acc = KClass::zero(dim);
            for (int i = 1; i <= dim + 1; ++i) {
                Int w = binomial(static_cast<unsigned long>(dim) + 1, static_cast<unsigned long>(i));
                if (i % 2 == 0) w = -w;
                acc = acc + w * lookup(k + i);
            }
            cache.emplace(key, std::move(acc));
        }
    }
    return cache.at(std::make_pair(m, dim));
}

// Class of the coordinate ring modulo l variables, from its Koszul
// resolution: coordinates (-1)^i binomial(l, i).
inline KClass sl_class(int l, int dim) {
    if (l < 0 || l > dim)
        throw IndexOutOfRange("subspace index " + std::to_string(l) + " outside 0.." + std::to_string(dim));
    std::vector<Int> n(static_cast<std::size_t>(dim) + 1, Int(0));
    for (int i = 0; i <= l; ++i) {
        Int v = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(i));
        n[static_cast<std::size_t>(i)] = (i % 2 == 0) ? v : Int(-v);
    }
    return KClass(dim, std::move(n));
}

// Basis change from [S_0],...,[S_d] coordinates to the [O(-m)] basis.
inline KClass to_o_basis(const SlCombo& combo) {
    if (combo.a.size() != static_cast<std::size_t>(combo.dim) + 1)
        throw DimensionMismatch("combo size does not match its dimension");
    KClass acc = KClass::zero(combo.dim);
    for (int l = 0; l <= combo.dim; ++l) {
        const Int& al = combo.a[static_cast<std::size_t>(l)];
        if (al == 0) continue;
        acc = acc + al * sl_class(l, combo.dim);
    }
    return acc;
}

// Inverse basis change; the transition matrix M[i][l] = (-1)^i binomial(l, i)
// is triangular with unit-magnitude diagonal, so back substitution stays in
// the integers.
inline SlCombo to_sl_basis(const KClass& cls) {
    const int d = cls.dim();
    SlCombo combo{d, std::vector<Int>(static_cast<std::size_t>(d) + 1, Int(0))};
    for (int i = d; i >= 0; --i) {
        Int v = (i % 2 == 0) ? cls.coeff(i) : Int(-cls.coeff(i));
        for (int l = i + 1; l <= d; ++l)
            v -= binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(i)) *
                 combo.a[static_cast<std::size_t>(l)];
        combo.a[static_cast<std::size_t>(i)] = v;
    }
    return combo;
}

// The map into A = A_0 x Z: the Chern polynomial prod_m (1 - m x)^{n_m}
// mod x^{d+1} together with the rank sum. A group homomorphism by the
// Whitney sum formula.
inline ChernRank zeta(const KClass& cls) {
    const int d = cls.dim();
    TruncatedSeries<Rational> chern = TruncatedSeries<Rational>::one(d);
    for (int m = 1; m <= d; ++m) {
        const Int& nm = cls.coeff(m);
        if (nm == 0) continue;
        chern = chern * one_minus_mx(d, Int(m)).pow(detail::to_long(nm));
    }
    return ChernRank(std::move(chern), cls.rank());
}

// The Hilbert polynomial of the class: sum_m n_m binomial(t+d-m, d).
inline UniPoly eta(const KClass& cls) {
    const int d = cls.dim();
    UniPoly p;
    for (int m = 0; m <= d; ++m) {
        const Int& nm = cls.coeff(m);
        if (nm == 0) continue;
        p += binom_poly(d - m, d) * Rational(nm);
    }
    return p;
}

namespace detail {

// Exact Gaussian elimination with partial (first nonzero) pivoting.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = a[col][col].inverse();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            const Rational f = a[row][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t row = n; row-- > 0;) {
        Rational acc = b[row];
        for (std::size_t j = row + 1; j < n; ++j) acc -= a[row][j] * x[j];
        x[row] = acc / a[row][row];
    }
    return x;
}

} // namespace detail

// Inverse of zeta. Take the series logarithm of the Chern part, read the
// power sums p_k = -k * [x^k] log, and solve the Vandermonde system
// sum_{m=1..d} r_m m^k = p_k; then r_0 = rank - sum r_m. A non-integral
// solution means the input lies outside the image of the K-group.
inline KClass zeta_inv(const ChernRank& c) {
    const int d = c.dim();
    if (d == 0) return KClass(0, {c.rank()});

    const TruncatedSeries<Rational> lg = c.chern().log();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    std::vector<Rational> p(static_cast<std::size_t>(d), Rational(0));
    for (int k = 1; k <= d; ++k) {
        p[static_cast<std::size_t>(k - 1)] = Rational(-k) * lg[k];
        for (int m = 1; m <= d; ++m) {
            Int power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
            a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)] = Rational(power);
        }
    }
    const std::vector<Rational> r = detail::solve_linear(std::move(a), std::move(p));

    std::vector<Int> coords(static_cast<std::size_t>(d) + 1, Int(0));
    Int sum(0);
    for (int m = 1; m <= d; ++m) {
        const Rational& rm = r[static_cast<std::size_t>(m - 1)];
        if (!rm.is_integer())
            throw NotRepresentable("multiplicity of twist " + std::to_string(m) + " is " + rm.str() +
                                   ", not an integer");
        coords[static_cast<std::size_t>(m)] = rm.as_integer();
        sum += coords[static_cast<std::size_t>(m)];
    }
    coords[0] = c.rank() - sum;
    KClass out(d, std::move(coords));
    if (!(zeta(out) == c))
        throw NotRepresentable("Chern data admits no integer K-class preimage");
    return out;
}

// Inverse of eta: integer coordinates in the subspace Hilbert basis, then a
// basis change to [O(-m)].
inline KClass eta_inv(const UniPoly& p, int dim) {
    return to_o_basis(poly_to_combo(p, dim));
}

} // namespace kpd

#endif // KPD_KTHEORY_HPP
