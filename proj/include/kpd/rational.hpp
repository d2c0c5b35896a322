#ifndef KPD_RATIONAL_HPP
#define KPD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "kpd/errors.hpp"

namespace kpd {

// Arbitrary-precision integer.
using Int = mpz_class;

namespace detail {

inline long to_long(const Int& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("integer exceeds machine-word range: " + v.get_str());
    return v.get_si();
}

} // namespace detail

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// binomial(n, k), zero when k > n.
inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Exact rational number, always in lowest terms with positive denominator.
// Equality is canonical-form equality. Values are immutable in practice:
// every operation returns a fresh value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}

    Rational(const Int& num, const Int& den) {
        if (sgn(den) == 0) throw ValidationError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // The integer value; only meaningful when is_integer().
    Int as_integer() const {
        if (!is_integer()) throw ValidationError("rational " + str() + " is not an integer");
        return v_.get_num();
    }

    Rational inverse() const {
        if (is_zero()) throw NotAUnit("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw NotAUnit("division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p" when integral, otherwise "p/q" with q > 0.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Accepts "p" or "p/q" with an optional leading sign on p.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text), Int(1));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    static Int parse_int(std::string_view text) {
        if (text.empty()) throw ValidationError("empty integer literal");
        std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
        if (i == text.size()) throw ValidationError("sign without digits");
        for (std::size_t k = i; k < text.size(); ++k)
            if (text[k] < '0' || text[k] > '9')
                throw ValidationError("invalid integer literal: " + std::string(text));
        return Int(std::string(text), 10);
    }

    mpq_class v_;
};

inline bool is_unit(const Rational& r) { return !r.is_zero(); }
inline Rational unit_inverse(const Rational& r) { return r.inverse(); }

} // namespace kpd

#endif // KPD_RATIONAL_HPP
