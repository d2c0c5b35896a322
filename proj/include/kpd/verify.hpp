#ifndef KPD_VERIFY_HPP
#define KPD_VERIFY_HPP

#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kpd/hrr.hpp"
#include "kpd/ktheory.hpp"
#include "kpd/rational.hpp"
#include "kpd/resolutions.hpp"
#include "kpd/series.hpp"
#include "kpd/unipoly.hpp"

// Self-check suites for the identities the library is built on. The CLI
// exposes them behind `verify`; the test suites reuse the generators.
namespace kpd::verify {

struct Options {
    int dim_max = 4;
    unsigned long seed = 20260808UL;
    int cases_per_dim = 150;
    int betti_cases = 60;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline KClass random_class(int dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-20, 20);
    std::vector<Int> n;
    n.reserve(static_cast<std::size_t>(dim) + 1);
    for (int m = 0; m <= dim; ++m) n.emplace_back(entry(rng));
    return KClass(dim, std::move(n));
}

inline BettiTable random_betti(int dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_entries(1, 12);
    std::uniform_int_distribution<int> hom_degree(0, dim + 1);
    std::uniform_int_distribution<long> twist(-6, dim + 6);
    std::uniform_int_distribution<long> count(1, 5);
    std::vector<BettiEntry> entries;
    const int want = n_entries(rng);
    while (static_cast<int>(entries.size()) < want) {
        BettiEntry e{hom_degree(rng), twist(rng), count(rng)};
        bool dup = false;
        for (const BettiEntry& seen : entries)
            if (seen.i == e.i && seen.j == e.j) dup = true;
        if (!dup) entries.push_back(e);
    }
    return BettiTable(dim, std::move(entries));
}

inline std::vector<SuiteResult> run_all(const Options& opt) {
    std::vector<SuiteResult> results;
    const auto add = [&results](std::string name, bool pass, std::string detail) {
        results.push_back(SuiteResult{std::move(name), pass, std::move(detail)});
    };

    // zeta_inv(zeta(a)) == a and eta_inv(eta(a)) == a.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            std::mt19937_64 rng(opt.seed + static_cast<unsigned long>(d));
            for (int c = 0; c < opt.cases_per_dim && ok; ++c) {
                const KClass a = random_class(d, rng);
                ok = zeta_inv(zeta(a)) == a && eta_inv(eta(a), d) == a;
            }
        }
        add("round-trips", ok, "zeta and eta followed by their inverses");
    }

    // hilbert_from_chern(zeta(a)) == eta(a).
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            std::mt19937_64 rng(opt.seed + 100 + static_cast<unsigned long>(d));
            for (int c = 0; c < opt.cases_per_dim && ok; ++c) {
                const KClass a = random_class(d, rng);
                ok = hilbert_from_chern(zeta(a)) == eta(a);
            }
        }
        add("hrr-consistency", ok, "Chern-to-Hilbert route matches eta");
    }

    // Termwise coefficient assembly agrees with the functional route, and
    // the Hilbert route back through the class agrees with both.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            std::mt19937_64 rng(opt.seed + 200 + static_cast<unsigned long>(d));
            for (int c = 0; c < opt.cases_per_dim && ok; ++c) {
                const KClass a = random_class(d, rng);
                const ChernRank z = zeta(a);
                ok = hilbert_termwise(z) == hilbert_from_chern(z) &&
                     eta(zeta_inv(z)) == hilbert_from_chern(z) &&
                     chern_from_hilbert(eta(a), d) == z &&
                     char_from_class(a) == chern_character(z);
            }
        }
        add("conversion-routes", ok, "coefficient, functional, and basis routes agree");
    }

    // zeta is a homomorphism: product of Chern parts, sum of ranks.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            std::mt19937_64 rng(opt.seed + 300 + static_cast<unsigned long>(d));
            for (int c = 0; c < opt.cases_per_dim && ok; ++c) {
                const KClass a = random_class(d, rng);
                const KClass b = random_class(d, rng);
                ok = zeta(a + b) == zeta(a) + zeta(b);
            }
        }
        add("whitney-law", ok, "zeta turns class sums into Chern products");
    }

    // Distinct classes stay distinct through eta and zeta; equal ranks are
    // not enough to fuse classes with equal Chern parts.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            std::mt19937_64 rng(opt.seed + 400 + static_cast<unsigned long>(d));
            for (int c = 0; c < opt.cases_per_dim && ok; ++c) {
                const KClass a = random_class(d, rng);
                const KClass b = random_class(d, rng);
                if (a == b) continue;
                ok = !(eta(a) == eta(b)) && !(zeta(a) == zeta(b));
            }
            const KClass unit = KClass::basis(d, 0);
            for (long r = 2; r <= 5 && ok; ++r) {
                const ChernRank zr = zeta(Int(r) * unit);
                ok = zr.chern() == zeta(unit).chern() && !(zr == zeta(unit));
            }
        }
        add("separation", ok, "distinct classes have distinct images");
    }

    // 1 - m x == prod_l C_{S_l}^{(-1)^l binomial(m, l)} mod x^{d+1}.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            for (int m = 0; m <= d && ok; ++m) {
                TruncatedSeries<Rational> rhs = TruncatedSeries<Rational>::one(d);
                for (int l = 0; l <= m; ++l) {
                    long e = detail::to_long(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(l)));
                    if (l % 2 != 0) e = -e;
                    rhs = rhs * sl_chern(l, d).pow(e);
                }
                ok = rhs == one_minus_mx(d, Int(m));
            }
        }
        add("twisted-congruence", ok, "twisted sheaf Chern product identity");
    }

    // binomial(t+d-m, d) == sum_l (-1)^l binomial(m, l) binomial(t+d-l, d-l).
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d)
            for (int m = 0; m <= d && ok; ++m)
                ok = combo_to_poly(twist_to_sl_combo(m, d)) == binom_poly(d - m, d);
        add("twist-expansion", ok, "twisted Hilbert polynomial in the subspace basis");
    }

    // binomial(t+d-m, d) == binomial(t+d-m+1, d) - binomial(t+d-m, d-1).
    {
        bool ok = true;
        for (int d = 1; d <= opt.dim_max && ok; ++d)
            for (int m = 0; m <= d && ok; ++m)
                ok = binom_poly(d - m, d) == binom_poly(d - m + 1, d) - binom_poly(d - m, d - 1);
        add("binomial-recurrence", ok, "Pascal step on binomial polynomials");
    }

    // The full Koszul complex resolves the zero sheaf.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            const BettiTable k = koszul_betti(d + 1, d);
            ok = class_from_betti(k).is_zero() && chern_from_betti(k).is_one() &&
                 rank_from_betti(k) == 0 && hilbert_from_betti(k).is_zero();
        }
        add("koszul-zero-sheaf", ok, "full Koszul table collapses to zero");
    }

    // Betti-table invariants commute with the class computation.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d) {
            std::mt19937_64 rng(opt.seed + 500 + static_cast<unsigned long>(d));
            for (int c = 0; c < opt.betti_cases && ok; ++c) {
                const BettiTable b = random_betti(d, rng);
                const KClass cls = class_from_betti(b);
                const ChernRank z = zeta(cls);
                ok = chern_from_betti(b) == z.chern() && rank_from_betti(b) == z.rank() &&
                     hilbert_from_betti(b) == eta(cls);
            }
            for (int l = 0; l <= d && ok; ++l)
                ok = sl_class(l, d) == class_from_betti(koszul_betti(l, d));
        }
        add("betti-commutation", ok, "table invariants factor through the class");
    }

    // eta(reduce_twist(m, d)) == binomial(t+d-m, d) well outside the basis range.
    {
        bool ok = true;
        for (int d = 0; d <= opt.dim_max && ok; ++d)
            for (long m = -5; m <= d + 5 && ok; ++m)
                ok = eta(reduce_twist(m, d)) == binom_poly(d - m, d);
        add("twist-reduction", ok, "Koszul reduction preserves Hilbert polynomials");
    }

    return results;
}

inline bool run_and_report(const Options& opt, std::ostream& os) {
    const std::vector<SuiteResult> results = run_all(opt);
    bool all = true;
    for (const SuiteResult& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
        all = all && r.pass;
    }
    os << (all ? "all suites passed" : "some suites FAILED") << " for dimensions 0.." << opt.dim_max << "\n";
    return all;
}

} // namespace kpd::verify

#endif // KPD_VERIFY_HPP
