#ifndef KPD_POLY_EXPR_HPP
#define KPD_POLY_EXPR_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kpd/errors.hpp"
#include "kpd/rational.hpp"
#include "kpd/series.hpp"
#include "kpd/unipoly.hpp"

namespace kpd {

namespace detail {

// Hand-rolled scanner for the expression grammar
//   expr  := ('+'|'-')? term (('+'|'-') term)*
//   term  := coeff | coeff '*'? var ('^' uint)? | var ('^' uint)?
//   coeff := int ('/' uint)?
// Whitespace is insignificant; repeated powers accumulate.
class PolyScanner {
public:
    PolyScanner(std::string_view text, char variable) : text_(text), var_(variable) {}

    std::vector<Rational> run() {
        skip_ws();
        if (at_end()) throw SyntaxError("empty expression", pos_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
        for (;;) {
            read_term(sign);
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw SyntaxError("expected '+' or '-'", pos_);
            take();
            sign = (op == '-') ? -1 : 1;
        }
        while (!acc_.empty() && acc_.back().is_zero()) acc_.pop_back();
        return std::move(acc_);
    }

private:
    static constexpr long max_exponent = 9999;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }
    bool at_alpha() const { return !at_end() && std::isalpha(static_cast<unsigned char>(peek())); }

    Int read_digits(const char* what) {
        if (!at_digit()) throw SyntaxError(std::string("expected ") + what, pos_);
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    long read_exponent() {
        const std::size_t start = pos_;
        const Int e = read_digits("exponent digits");
        if (e > max_exponent) throw SyntaxError("exponent too large", start);
        return detail::to_long(e);
    }

    void read_term(int sign) {
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (take() == '-') sign = -sign;
            skip_ws();
        }
        Rational coeff(1);
        bool have_coeff = false;
        if (at_digit()) {
            const Int num = read_digits("digits");
            Int den(1);
            skip_ws();
            if (!at_end() && peek() == '/') {
                take();
                skip_ws();
                const std::size_t den_pos = pos_;
                den = read_digits("denominator digits");
                if (den == 0) throw SyntaxError("zero denominator", den_pos);
            }
            coeff = Rational(num, den);
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
                if (!at_alpha()) throw SyntaxError("expected variable after '*'", pos_);
            }
        }
        long power = 0;
        if (at_alpha()) {
            if (peek() != var_)
                throw WrongVariable(std::string("unexpected variable '") + peek() + "', expected '" + var_ + "'",
                                    pos_);
            take();
            power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                take();
                skip_ws();
                power = read_exponent();
            }
        } else if (!have_coeff) {
            throw SyntaxError("expected a term", pos_);
        }
        if (static_cast<std::size_t>(power) >= acc_.size()) acc_.resize(static_cast<std::size_t>(power) + 1, Rational(0));
        Rational signed_coeff = (sign < 0) ? -coeff : coeff;
        acc_[static_cast<std::size_t>(power)] += signed_coeff;
    }

    std::string_view text_;
    char var_;
    std::size_t pos_ = 0;
    std::vector<Rational> acc_;
};

inline std::string power_suffix(char var, int k) {
    std::string s(1, var);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

} // namespace detail

// Dense coefficient list (index = power, trailing zeros trimmed; the zero
// polynomial comes back empty). variable must be 'x' or 't'; any other
// letter in the input raises WrongVariable.
inline std::vector<Rational> parse_poly(std::string_view text, char variable) {
    return detail::PolyScanner(text, variable).run();
}

// Compact ascending form used for Chern polynomials: "1-3x+2x^2".
inline std::string format_chern(const TruncatedSeries<Rational>& s) {
    std::string out;
    for (int k = 0; k <= s.bound(); ++k) {
        const Rational& c = s[k];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        std::string piece;
        if (k == 0)
            piece = mag.str();
        else if (mag.is_one())
            piece = detail::power_suffix('x', k);
        else
            piece = mag.str() + (mag.is_integer() ? "" : "*") + detail::power_suffix('x', k);
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + piece;
        else
            out += (c.sign() < 0 ? "-" : "+") + piece;
    }
    return out.empty() ? "0" : out;
}

// Spaced descending form used for Hilbert polynomials: "1/2*t^2 + 1/2*t".
inline std::string format_hilbert(const UniPoly& p) {
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        std::string piece;
        if (k == 0)
            piece = mag.str();
        else if (mag.is_one())
            piece = detail::power_suffix('t', k);
        else
            piece = mag.str() + "*" + detail::power_suffix('t', k);
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + piece;
        else
            out += (c.sign() < 0 ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

} // namespace kpd

#endif // KPD_POLY_EXPR_HPP
