// Command-line front end: conversions between Chern data, Hilbert
// polynomials, K-classes, and Betti tables on projective d-space.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpd/kpd.hpp"
#include "kpd/verify.hpp"

namespace {

using nlohmann::ordered_json;

enum : int {
    exit_ok = 0,
    exit_suite_failure = 1,
    exit_bad_input = 2,
    exit_not_representable = 3,
};

// Dense parse result -> series in Q[x]/x^{dim+1}; extra terms fall away mod x^{dim+1}.
kpd::TruncatedSeries<kpd::Rational> series_from_coeffs(const std::vector<kpd::Rational>& coeffs, int dim) {
    std::vector<kpd::Rational> padded(static_cast<std::size_t>(dim) + 1, kpd::Rational(0));
    for (std::size_t k = 0; k < coeffs.size() && k < padded.size(); ++k) padded[k] = coeffs[k];
    return kpd::TruncatedSeries<kpd::Rational>(dim, std::move(padded));
}

ordered_json rational_list(const kpd::TruncatedSeries<kpd::Rational>& s) {
    ordered_json arr = ordered_json::array();
    for (const kpd::Rational& c : s.coeffs()) arr.push_back(c.str());
    return arr;
}

ordered_json coord_list(const kpd::KClass& cls) {
    ordered_json arr = ordered_json::array();
    for (const kpd::Int& v : cls.coords()) {
        if (v.fits_slong_p())
            arr.push_back(v.get_si());
        else
            arr.push_back(v.get_str());
    }
    return arr;
}

std::string coord_text(const kpd::KClass& cls) {
    std::string out = "[";
    for (std::size_t m = 0; m < cls.coords().size(); ++m) {
        if (m) out += ", ";
        out += cls.coords()[m].get_str();
    }
    return out + "]";
}

std::string rational_text(const kpd::TruncatedSeries<kpd::Rational>& s) {
    std::string out = "[";
    for (int k = 0; k <= s.bound(); ++k) {
        if (k) out += ", ";
        out += s[k].str();
    }
    return out + "]";
}

void emit(const ordered_json& doc, const std::vector<std::pair<std::string, std::string>>& text_lines,
          const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& [key, value] : text_lines) std::cout << key << ": " << value << "\n";
    }
}

struct CommandContext {
    int dim = 0;
    std::string chern_expr;
    std::string hilbert_expr;
    long rank = 0;
    long twist = 0;
    std::string betti_file;
    int dim_max = 4;
    std::string format = "text";
    int exit_status = exit_ok;
};

void run_chern2hilbert(CommandContext& ctx) {
    const auto coeffs = kpd::parse_poly(ctx.chern_expr, 'x');
    const kpd::ChernRank c(series_from_coeffs(coeffs, ctx.dim), kpd::Int(ctx.rank));
    const kpd::UniPoly h = kpd::hilbert_from_chern(c);
    ordered_json doc;
    doc["dim"] = ctx.dim;
    doc["hilbert"] = kpd::format_hilbert(h);
    emit(doc, {{"hilbert", kpd::format_hilbert(h)}}, ctx.format);
}

void run_hilbert2chern(CommandContext& ctx) {
    const auto coeffs = kpd::parse_poly(ctx.hilbert_expr, 't');
    const kpd::UniPoly p{std::vector<kpd::Rational>(coeffs)};
    const kpd::ChernRank c = kpd::chern_from_hilbert(p, ctx.dim);
    ordered_json doc;
    doc["dim"] = ctx.dim;
    doc["chern"] = kpd::format_chern(c.chern());
    doc["rank"] = kpd::detail::to_long(c.rank());
    emit(doc, {{"chern", kpd::format_chern(c.chern())}, {"rank", c.rank().get_str()}}, ctx.format);
}

void run_class_reduce(CommandContext& ctx) {
    const kpd::KClass cls = kpd::reduce_twist(ctx.twist, ctx.dim);
    ordered_json doc;
    doc["dim"] = ctx.dim;
    doc["twist"] = ctx.twist;
    doc["class"] = coord_list(cls);
    emit(doc, {{"class", coord_text(cls)}}, ctx.format);
}

void run_betti(CommandContext& ctx) {
    std::ifstream in(ctx.betti_file, std::ios::binary);
    if (!in) throw kpd::ValidationError("cannot open file: " + ctx.betti_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const kpd::BettiTable table = kpd::parse_betti_json(buffer.str());
    if (table.dim() != ctx.dim)
        throw kpd::ValidationError("--dim " + std::to_string(ctx.dim) + " disagrees with file dimension " +
                                   std::to_string(table.dim()));
    const kpd::KClass cls = kpd::class_from_betti(table);
    const auto chern = kpd::chern_from_betti(table);
    const kpd::Int rank = kpd::rank_from_betti(table);
    const kpd::UniPoly hilbert = kpd::hilbert_from_betti(table);
    ordered_json doc;
    doc["dim"] = ctx.dim;
    doc["class"] = coord_list(cls);
    doc["chern"] = kpd::format_chern(chern);
    doc["rank"] = kpd::detail::to_long(rank);
    doc["hilbert"] = kpd::format_hilbert(hilbert);
    emit(doc,
         {{"class", coord_text(cls)},
          {"chern", kpd::format_chern(chern)},
          {"rank", rank.get_str()},
          {"hilbert", kpd::format_hilbert(hilbert)}},
         ctx.format);
}

void run_todd(CommandContext& ctx) {
    const kpd::ToddFactor todd = kpd::todd_factor(ctx.dim);
    ordered_json doc;
    doc["dim"] = ctx.dim;
    doc["todd"] = rational_list(todd);
    emit(doc, {{"todd", rational_text(todd)}}, ctx.format);
}

void run_verify(CommandContext& ctx) {
    kpd::verify::Options opt;
    opt.dim_max = ctx.dim_max;
    ctx.exit_status = kpd::verify::run_and_report(opt, std::cout) ? exit_ok : exit_suite_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact conversions between K-classes, Chern data, and Hilbert polynomials on P^d"};
    app.require_subcommand(1);

    CommandContext ctx;
    const auto add_dim = [&ctx](CLI::App* cmd) {
        cmd->add_option("--dim", ctx.dim, "ambient projective dimension d")
            ->required()
            ->check(CLI::NonNegativeNumber);
    };
    const auto add_format = [&ctx](CLI::App* cmd) {
        cmd->add_option("--format", ctx.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->default_val("text");
    };

    CLI::App* c2h = app.add_subcommand("chern2hilbert", "Hilbert polynomial from a Chern polynomial and rank");
    add_dim(c2h);
    c2h->add_option("--chern", ctx.chern_expr, "Chern polynomial in x, e.g. \"1-3x+2x^2\"")->required();
    c2h->add_option("--rank", ctx.rank, "rank of the class")->required();
    add_format(c2h);
    c2h->callback([&ctx] { run_chern2hilbert(ctx); });

    CLI::App* h2c = app.add_subcommand("hilbert2chern", "Chern polynomial and rank from a Hilbert polynomial");
    add_dim(h2c);
    h2c->add_option("--hilbert", ctx.hilbert_expr, "Hilbert polynomial in t, e.g. \"t+1\"")->required();
    add_format(h2c);
    h2c->callback([&ctx] { run_hilbert2chern(ctx); });

    CLI::App* cr = app.add_subcommand("class-reduce", "write [O(-m)] in the basis [O(0)],...,[O(-d)]");
    add_dim(cr);
    cr->add_option("--twist", ctx.twist, "twist m (any integer)")->required();
    add_format(cr);
    cr->callback([&ctx] { run_class_reduce(ctx); });

    CLI::App* bt = app.add_subcommand("betti", "class, Chern, rank, and Hilbert data of a Betti table");
    add_dim(bt);
    bt->add_option("--file", ctx.betti_file, "JSON file {\"dim\": d, \"betti\": [{\"i\",\"j\",\"count\"}...]}")
        ->required();
    add_format(bt);
    bt->callback([&ctx] { run_betti(ctx); });

    CLI::App* td = app.add_subcommand("todd", "Todd coefficients for dimension d");
    add_dim(td);
    add_format(td);
    td->callback([&ctx] { run_todd(ctx); });

    CLI::App* vf = app.add_subcommand("verify", "run the identity suites for all dimensions up to --dim-max");
    vf->add_option("--dim-max", ctx.dim_max, "largest dimension to check (0..12)")
        ->required()
        ->check(CLI::Range(0, 12));
    vf->callback([&ctx] { run_verify(ctx); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_input;
    } catch (const kpd::NotInHilbertLattice& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_not_representable;
    } catch (const kpd::NotRepresentable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_not_representable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return ctx.exit_status;
}
