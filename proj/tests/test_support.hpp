#ifndef KPD_TEST_SUPPORT_HPP
#define KPD_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "kpd/rational.hpp"
#include "kpd/series.hpp"
#include "kpd/unipoly.hpp"

namespace kpdtest {

using kpd::Int;
using kpd::Rational;

// Series from rational literals, bound = size - 1.
inline kpd::TruncatedSeries<Rational> series(std::vector<std::string> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const std::string& c : coeffs) v.push_back(Rational::parse(c));
    const int bound = static_cast<int>(v.size()) - 1;
    return kpd::TruncatedSeries<Rational>(bound, std::move(v));
}

inline kpd::UniPoly poly(std::vector<std::string> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const std::string& c : coeffs) v.push_back(Rational::parse(c));
    return kpd::UniPoly(std::move(v));
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(Int(num(rng)), Int(den(rng)));
}

inline kpd::TruncatedSeries<Rational> random_series(int bound, std::mt19937_64& rng) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) v.push_back(random_rational(rng));
    return kpd::TruncatedSeries<Rational>(bound, std::move(v));
}

// Reference convolution, independent of the series implementation.
inline std::vector<Rational> naive_convolution(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace kpdtest

#endif // KPD_TEST_SUPPORT_HPP
