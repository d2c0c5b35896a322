#ifndef KPD_RESOLUTIONS_HPP
#define KPD_RESOLUTIONS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kpd/errors.hpp"
#include "kpd/ktheory.hpp"
#include "kpd/series.hpp"
#include "kpd/unipoly.hpp"

namespace kpd {

// One summand O(-j)^count in homological degree i of a graded free resolution.
struct BettiEntry {
    int i = 0;
    long j = 0;
    long count = 0;

    bool operator==(const BettiEntry&) const = default;
};

// Multiset of resolution summands over projective dim-space. Entries are kept
// sorted by (i, j); counts are strictly positive and each (i, j) appears at
// most once. Exactness of the underlying complex is not (and cannot be)
// checked here; the table is taken at face value.
class BettiTable {
public:
    BettiTable(int dim, std::vector<BettiEntry> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (dim_ < 0) throw DimensionMismatch("negative dimension");
        for (const BettiEntry& e : entries_) {
            if (e.count <= 0)
                throw ValidationError("multiplicity at (i=" + std::to_string(e.i) + ", j=" +
                                      std::to_string(e.j) + ") must be positive");
            if (e.i < 0 || e.i > dim_ + 1)
                throw ValidationError("homological degree " + std::to_string(e.i) +
                                      " outside 0.." + std::to_string(dim_ + 1));
        }
        std::sort(entries_.begin(), entries_.end(),
                  [](const BettiEntry& a, const BettiEntry& b) {
                      return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
                  });
        for (std::size_t k = 1; k < entries_.size(); ++k)
            if (entries_[k].i == entries_[k - 1].i && entries_[k].j == entries_[k - 1].j)
                throw ValidationError("duplicate entry (i=" + std::to_string(entries_[k].i) +
                                      ", j=" + std::to_string(entries_[k].j) + ")");
    }

    int dim() const { return dim_; }
    const std::vector<BettiEntry>& entries() const { return entries_; }

    bool operator==(const BettiTable&) const = default;

private:
    int dim_;
    std::vector<BettiEntry> entries_;
};

// Alternating sum of the resolution in the K-group:
// sum_{i,j} (-1)^i count * [O(-j)].
inline KClass class_from_betti(const BettiTable& b) {
    KClass acc = KClass::zero(b.dim());
    for (const BettiEntry& e : b.entries()) {
        Int w(e.count);
        if (e.i % 2 != 0) w = -w;
        acc = acc + w * reduce_twist(e.j, b.dim());
    }
    return acc;
}

inline Int rank_from_betti(const BettiTable& b) {
    Int r(0);
    for (const BettiEntry& e : b.entries()) r += (e.i % 2 == 0) ? Int(e.count) : Int(-e.count);
    return r;
}

// Chern polynomial of the resolved sheaf: even homological degrees in the
// numerator, odd ones in the denominator, all mod x^{d+1}.
inline TruncatedSeries<Rational> chern_from_betti(const BettiTable& b) {
    const int d = b.dim();
    TruncatedSeries<Rational> even = TruncatedSeries<Rational>::one(d);
    TruncatedSeries<Rational> odd = TruncatedSeries<Rational>::one(d);
    for (const BettiEntry& e : b.entries()) {
        const TruncatedSeries<Rational> f = one_minus_mx(d, Int(e.j)).pow(e.count);
        if (e.i % 2 == 0)
            even = even * f;
        else
            odd = odd * f;
    }
    return even * odd.inverse();
}

// Hilbert polynomial of the resolved sheaf:
// sum_{i,j} (-1)^i count * binomial(t+d-j, d).
inline UniPoly hilbert_from_betti(const BettiTable& b) {
    const int d = b.dim();
    UniPoly p;
    for (const BettiEntry& e : b.entries()) {
        Rational w(Int(e.count));
        if (e.i % 2 != 0) w = -w;
        p += binom_poly(d - e.j, d) * w;
    }
    return p;
}

// Betti table of the Koszul resolution of the coordinate ring modulo l
// variables: beta_{i,i} = binomial(l, i). l = dim+1 resolves the zero sheaf.
inline BettiTable koszul_betti(int l, int dim) {
    if (l < 0 || l > dim + 1)
        throw IndexOutOfRange("Koszul length " + std::to_string(l) + " outside 0.." +
                              std::to_string(dim + 1));
    std::vector<BettiEntry> entries;
    for (int i = 0; i <= l; ++i) {
        const Int c = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(i));
        entries.push_back(BettiEntry{i, i, detail::to_long(c)});
    }
    return BettiTable(dim, std::move(entries));
}

// Chern polynomial of S_l, straight from its Koszul resolution:
// prod_{i=0..l} (1 - i x)^{(-1)^i binomial(l, i)} mod x^{d+1}.
inline TruncatedSeries<Rational> sl_chern(int l, int dim) {
    if (l < 0 || l > dim)
        throw IndexOutOfRange("subspace index " + std::to_string(l) + " outside 0.." + std::to_string(dim));
    TruncatedSeries<Rational> acc = TruncatedSeries<Rational>::one(dim);
    for (int i = 0; i <= l; ++i) {
        long e = detail::to_long(binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(i)));
        if (i % 2 != 0) e = -e;
        acc = acc * one_minus_mx(dim, Int(i)).pow(e);
    }
    return acc;
}

// Canonical JSON form:
//   {"dim": d, "betti": [{"i": int, "j": int, "count": int}, ...]}
inline BettiTable parse_betti_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("betti JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("betti"))
        throw ValidationError("betti JSON must be an object with \"dim\" and \"betti\"");
    if (!doc["dim"].is_number_integer())
        throw ValidationError("\"dim\" must be an integer");
    if (!doc["betti"].is_array())
        throw ValidationError("\"betti\" must be an array");
    const long long dim_raw = doc["dim"].get<long long>();
    if (dim_raw < 0 || dim_raw > 100000)
        throw ValidationError("\"dim\" outside the supported range 0..100000");
    const int dim = static_cast<int>(dim_raw);
    std::vector<BettiEntry> entries;
    for (const auto& item : doc["betti"]) {
        if (!item.is_object() || !item.contains("i") || !item.contains("j") || !item.contains("count"))
            throw ValidationError("each betti entry needs integer fields \"i\", \"j\", \"count\"");
        for (const char* key : {"i", "j", "count"})
            if (!item[key].is_number_integer())
                throw ValidationError(std::string("betti entry field \"") + key + "\" must be an integer");
        entries.push_back(BettiEntry{item["i"].get<int>(), item["j"].get<long>(), item["count"].get<long>()});
    }
    return BettiTable(dim, std::move(entries));
}

inline std::string betti_to_json(const BettiTable& b) {
    nlohmann::ordered_json doc;
    doc["dim"] = b.dim();
    doc["betti"] = nlohmann::ordered_json::array();
    for (const BettiEntry& e : b.entries())
        doc["betti"].push_back(nlohmann::ordered_json{{"i", e.i}, {"j", e.j}, {"count", e.count}});
    return doc.dump();
}

} // namespace kpd

#endif // KPD_RESOLUTIONS_HPP
