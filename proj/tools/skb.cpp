// Command-line surface over the basis construction: exact cost evaluation,
// index-set enumeration, chart expansions, profile queries, basis building
// and certificate verification. Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error, 3 truncation certification failure.

#include "skb/basis.hpp"
#include "skb/cost.hpp"
#include "skb/cost_oracle.hpp"
#include "skb/section.hpp"
#include "skb/skeleton.hpp"
#include "skb/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

skb::Rat rat_arg(const std::string& text, const char* flag) {
    auto r = skb::parse_rational(text);
    if (!r)
        throw UsageError(std::string("cannot parse ") + flag + " = '" + text +
                         "' as an exact rational p/q");
    return *r;
}

int resolved_margin(const std::optional<int>& flag_margin) {
    if (flag_margin)
        return *flag_margin;
    if (const char* env = std::getenv("SKB_TRUNC_MARGIN")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
            throw UsageError("SKB_TRUNC_MARGIN must be a nonnegative integer");
        return static_cast<int>(v);
    }
    return 0;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file " + out_path);
    out << text;
    std::cout << "wrote " << out_path << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string pretty_series(const skb::TruncatedSeries& s) {
    if (s.is_zero())
        return "0";
    std::vector<std::pair<skb::Exp, skb::Rat>> terms(s.terms().begin(), s.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.p + a.first.q, tb = b.first.p + b.first.q;
        return ta != tb ? ta < tb : a.first.p > b.first.p;
    });
    std::string out;
    for (const auto& [e, c] : terms) {
        skb::Rat mag = c < 0 ? skb::Rat(-c) : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string vars;
        auto var = [&](const char* name, int exp) {
            if (exp == 0)
                return;
            if (!vars.empty())
                vars += " ";
            vars += name;
            if (exp > 1)
                vars += "^" + std::to_string(exp);
        };
        var("x", e.p);
        var("y", e.q);
        if (vars.empty() || mag != 1)
            out += skb::rat_string(mag) + (vars.empty() ? "" : " ");
        out += vars;
    }
    return out;
}

void print_profile(const skb::ValuationProfile& profile) {
    std::cout << "edge: " << profile.edge << "\n";
    std::cout << "route: " << skb::route_name(profile.route) << "\n";
    auto join = [](const std::vector<skb::Rat>& xs) {
        std::string out;
        for (const auto& x : xs)
            out += (out.empty() ? "" : ", ") + skb::rat_string(x);
        return out;
    };
    std::cout << "breakpoints: " << join(profile.pl.breakpoints()) << "\n";
    std::cout << "values: " << join(profile.pl.values()) << "\n";
    std::cout << "slopes: " << join(profile.pl.slopes()) << "\n";
}

int run_verify(const skb::BasisDescriptor& basis, int margin, const std::string& out_path) {
    auto cert = skb::verify_theorem(basis, skb::VerifyOptions{margin});
    emit(skb::certificate_to_json(cert), out_path);
    if (cert.ok()) {
        std::cerr << "verify: degree " << basis.degree << ": all checks passed; valuative "
                  << "independence certified via slope distinctness (" << basis.entries.size()
                  << " distinct slopes on every generic subinterval)\n";
        return 0;
    }
    std::cerr << "verify: degree " << basis.degree << ": FAILED\n";
    for (const auto& ce : cert.counterexamples)
        std::cerr << "  counterexample: m = (edge " << ce.m.edge() << ", a " << ce.m.a() << ", b "
                  << ce.m.b() << "), edge " << ce.edge << ", r in [" << skb::rat_string(ce.r_lo)
                  << ", " << skb::rat_string(ce.r_hi) << "]: " << ce.what << " (expected "
                  << ce.expected << ", got " << ce.actual << ")\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"valuatively independent section bases for the Fermat cubic pencil"};
    app.require_subcommand(1);

    std::string t_text, tv_text, out_path, file_path;
    long a = 0, b = 0;
    int degree = 0, edge = 0, trunc = -1;
    std::optional<int> margin_flag;
    std::string t_min = "-6", t_max = "6", t_step = "1/7";
    std::string tv_min = "-18", tv_max = "18", tv_step = "1/7";

    auto add_margin = [&](CLI::App* cmd) {
        cmd->add_option("--trunc-margin", margin_flag,
                        "added to the default truncation degree (overrides SKB_TRUNC_MARGIN)");
    };

    auto* cmd_cost = app.add_subcommand("cost", "evaluate the cost c(t, tv) with its floors");
    cmd_cost->add_option("--t", t_text, "skeleton coordinate, rational p/q")->required();
    cmd_cost->add_option("--tv", tv_text, "polytope coordinate, rational p/q")->required();

    auto* cmd_phi0 = app.add_subcommand("phi0", "evaluate the convex section on the cover");
    cmd_phi0->add_option("--t", t_text)->required();

    auto* cmd_leg = app.add_subcommand("legendre", "evaluate the Legendre transform of phi0");
    cmd_leg->add_option("--tv", tv_text)->required();

    auto* cmd_pair = app.add_subcommand("pairing", "evaluate the canonical pairing [t, tv]");
    cmd_pair->add_option("--t", t_text)->required();
    cmd_pair->add_option("--tv", tv_text)->required();

    auto* cmd_lambda = app.add_subcommand("lambda", "enumerate the correction index set");
    cmd_lambda->add_option("--a", a)->required();
    cmd_lambda->add_option("--b", b)->required();

    auto* cmd_build = app.add_subcommand("build", "build the basis for one degree");
    cmd_build->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
    cmd_build->add_option("--out", out_path, "output path (stdout if omitted)");
    add_margin(cmd_build);

    auto* cmd_expand = app.add_subcommand("expand", "chart-expand S(a,b) on an edge");
    cmd_expand->add_option("--a", a)->required();
    cmd_expand->add_option("--b", b)->required();
    cmd_expand->add_option("--edge", edge)->required()->check(CLI::Range(0, 2));
    cmd_expand->add_option("--D", trunc, "truncation total degree")->required();
    add_margin(cmd_expand);

    auto* cmd_val = app.add_subcommand("val", "certified valuation profile of S(a,b)");
    cmd_val->add_option("--a", a)->required();
    cmd_val->add_option("--b", b)->required();
    cmd_val->add_option("--edge", edge)->required()->check(CLI::Range(0, 2));
    add_margin(cmd_val);

    auto* cmd_verify = app.add_subcommand("verify", "verify a basis and emit a certificate");
    auto* vd = cmd_verify->add_option("--degree", degree, "build then verify this degree");
    auto* vf = cmd_verify->add_option("--file", file_path, "verify a basis JSON file");
    cmd_verify->add_option("--out", out_path, "certificate path (stdout if omitted)");
    add_margin(cmd_verify);

    auto* cmd_sample = app.add_subcommand("sample-cost", "CSV sample of the cost function");
    cmd_sample->add_option("--t-min", t_min);
    cmd_sample->add_option("--t-max", t_max);
    cmd_sample->add_option("--t-step", t_step);
    cmd_sample->add_option("--tv-min", tv_min);
    cmd_sample->add_option("--tv-max", tv_max);
    cmd_sample->add_option("--tv-step", tv_step);
    cmd_sample->add_option("--out", out_path, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_cost->parsed()) {
            auto c = skb::cost(rat_arg(t_text, "--t"), rat_arg(tv_text, "--tv"));
            std::cout << "value: " << skb::rat_string(c.value) << "\n"
                      << "k: " << c.k << "\n"
                      << "l: " << c.l << "\n"
                      << "m: " << c.m << "\n";
        } else if (cmd_phi0->parsed()) {
            std::cout << "value: " << skb::rat_string(skb::phi0(rat_arg(t_text, "--t"))) << "\n";
        } else if (cmd_leg->parsed()) {
            std::cout << "value: " << skb::rat_string(skb::legendre_star(rat_arg(tv_text, "--tv")))
                      << "\n";
        } else if (cmd_pair->parsed()) {
            std::cout << "value: "
                      << skb::rat_string(
                             skb::bracket(rat_arg(t_text, "--t"), rat_arg(tv_text, "--tv")))
                      << "\n";
        } else if (cmd_lambda->parsed()) {
            auto entries = skb::lambda_set(a, b);
            std::cout << "lambda set for (" << a << "," << b << "): [";
            for (std::size_t i = 0; i < entries.size(); ++i)
                std::cout << (i ? ", " : "") << "(m=" << entries[i].m << ", s=" << entries[i].s
                          << ", d=" << entries[i].d << ")";
            std::cout << "]";
            if (entries.empty() && a % b == 0)
                std::cout << "  (a multiple of b)";
            std::cout << "\n";
            long formula = skb::lambda_cardinality(a, b);
            std::cout << "cardinality: enumeration " << entries.size() << ", formula " << formula
                      << (static_cast<long>(entries.size()) == formula ? " (match)"
                                                                       : " (MISMATCH)")
                      << "\n";
        } else if (cmd_build->parsed()) {
            skb::SectionBuilder builder(
                skb::SectionBuilder::Options{resolved_margin(margin_flag), std::nullopt});
            auto basis = skb::build_basis(degree, builder);
            emit(skb::basis_to_json(basis), out_path);
        } else if (cmd_expand->parsed()) {
            skb::SectionBuilder builder;
            const skb::Section& s = builder.section(a, b);
            std::cout << "S(" << a << "," << b << ") on edge " << edge
                      << ", truncated at total degree " << trunc << ":\n"
                      << pretty_series(skb::chart_expand(s, edge, trunc)) << "\n";
        } else if (cmd_val->parsed()) {
            skb::SectionBuilder builder;
            const skb::Section& s = builder.section(a, b);
            int D = skb::default_trunc_degree(s.degree(), resolved_margin(margin_flag));
            print_profile(skb::certified_valuation_profile(s, edge, D));
        } else if (cmd_verify->parsed()) {
            if (vd->count() == vf->count())
                throw UsageError("verify needs exactly one of --degree or --file");
            int margin = resolved_margin(margin_flag);
            if (vd->count()) {
                skb::SectionBuilder builder(
                    skb::SectionBuilder::Options{margin, std::nullopt});
                return run_verify(skb::build_basis(degree, builder), margin, out_path);
            }
            skb::BasisDescriptor basis;
            try {
                basis = skb::basis_from_json(slurp(file_path));
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                throw UsageError(std::string("cannot parse basis file: ") + e.what());
            }
            return run_verify(basis, margin, out_path);
        } else if (cmd_sample->parsed()) {
            skb::Rat t0 = rat_arg(t_min, "--t-min"), t1 = rat_arg(t_max, "--t-max");
            skb::Rat dt = rat_arg(t_step, "--t-step");
            skb::Rat v0 = rat_arg(tv_min, "--tv-min"), v1 = rat_arg(tv_max, "--tv-max");
            skb::Rat dv = rat_arg(tv_step, "--tv-step");
            if (dt <= 0 || dv <= 0)
                throw UsageError("steps must be positive");
            std::ostringstream csv;
            csv << "t,tv,cost\n";
            for (skb::Rat t = t0; t <= t1; t += dt)
                for (skb::Rat tv = v0; tv <= v1; tv += dv)
                    csv << skb::rat_string(t) << "," << skb::rat_string(tv) << ","
                        << skb::rat_string(skb::cost(t, tv).value) << "\n";
            emit(csv.str(), out_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const skb::CertificationError& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        if (e.suggested_margin() > 0)
            std::cerr << "suggestion: rerun with --trunc-margin " << e.suggested_margin()
                      << " (or higher)\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
