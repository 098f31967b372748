// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_CLI_HPP
#define QTHETA_CLI_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qtheta/catalog.hpp>
#include <qtheta/discover.hpp>
#include <qtheta/divisor.hpp>
#include <qtheta/numeric.hpp>
#include <qtheta/resultant.hpp>
#include <qtheta/theta.hpp>
#include <qtheta/verify.hpp>

namespace qtheta
{

// Bad flags or malformed values: exit code 2.
class usage_error : public ::std::runtime_error
{
public:
    using ::std::runtime_error::runtime_error;
};

struct run_config {
    ::std::string cutoff = "8";
    double tol = 1e-9;
    ::std::uint64_t seed = 0;
    ::std::size_t samples = 20;
    ::std::string catalog_path;
    ::std::string format = "text";
    unsigned jobs = default_jobs();
    bool timing = false;
};

namespace detail
{

using ojson = nlohmann::ordered_json;

inline rational parse_rational_flag(const ::std::string &name, const ::std::string &text)
{
    try {
        return rational::parse(text);
    } catch (const ::std::exception &e) {
        throw usage_error("--" + name + ": " + e.what());
    }
}

// "re,im" or a bare real.
inline ::std::complex<double> parse_complex_flag(const ::std::string &name, const ::std::string &text)
{
    const auto comma = text.find(',');
    try {
        ::std::size_t used = 0;
        if (comma == ::std::string::npos) {
            const double re = ::std::stod(text, &used);
            if (used != text.size()) {
                throw ::std::invalid_argument(text);
            }
            return {re, 0.0};
        }
        const auto a = text.substr(0, comma), b = text.substr(comma + 1);
        const double re = ::std::stod(a, &used);
        if (used != a.size()) {
            throw ::std::invalid_argument(text);
        }
        const double im = ::std::stod(b, &used);
        if (used != b.size()) {
            throw ::std::invalid_argument(text);
        }
        return {re, im};
    } catch (const ::std::exception &) {
        throw usage_error("--" + name + ": expected \"re,im\", got '" + text + "'");
    }
}

inline ::std::complex<double> parse_tau_flag(const ::std::string &text)
{
    const auto t = parse_complex_flag("tau", text);
    if (!(t.imag() > 0)) {
        throw usage_error("--tau: Im(tau) must be positive");
    }
    return t;
}

inline ::std::vector<cyclotomic> parse_coefficients(const ::std::string &name, const ::std::string &text)
{
    ::std::vector<cyclotomic> out;
    ::std::stringstream ss(text);
    ::std::string item;
    while (::std::getline(ss, item, ',')) {
        try {
            out.push_back(cyclotomic::parse(item));
        } catch (const ::std::exception &e) {
            throw usage_error("--" + name + ": " + e.what());
        }
    }
    if (out.empty()) {
        throw usage_error("--" + name + ": no coefficients");
    }
    return out;
}

inline ojson complex_json(::std::complex<double> v)
{
    return ojson::array({v.real(), v.imag()});
}

inline ::std::string complex_text(::std::complex<double> v)
{
    ::std::ostringstream os;
    os << ::std::setprecision(15) << v.real() << (v.imag() < 0 ? " - " : " + ") << ::std::abs(v.imag()) << "i";
    return os.str();
}

inline ::std::string real_text(double v)
{
    ::std::ostringstream os;
    os << ::std::setprecision(6) << v;
    return os.str();
}

inline ojson series_terms_json(const series &s)
{
    auto a = ojson::array();
    for (const auto &[e, c] : s.terms()) {
        ojson t;
        t["x"] = e.x.to_fraction_string();
        t["z"] = e.z.to_fraction_string();
        t["coeff"] = c.to_string();
        a.push_back(::std::move(t));
    }
    return a;
}

inline ojson envelope(const ::std::string &command)
{
    ojson j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

inline ::std::vector<identity> load(const run_config &cfg)
{
    return cfg.catalog_path.empty() ? builtin_catalog() : load_catalog(cfg.catalog_path);
}

inline rational cutoff_of(const run_config &cfg)
{
    const rational c = parse_rational_flag("cutoff", cfg.cutoff);
    if (c.sign() <= 0) {
        throw usage_error("--cutoff must be positive");
    }
    return c;
}

} // namespace detail

struct verify_options {
    ::std::vector<::std::string> ids;
    bool all = false;
    ::std::string mode = "exact";
    ::std::optional<::std::uint64_t> corrupt;
};

inline int cmd_verify(const run_config &cfg, const verify_options &opt, ::std::ostream &out)
{
    using detail::ojson;
    if (opt.all == !opt.ids.empty()) {
        throw usage_error("verify: pass exactly one of --all or --id");
    }
    if (opt.mode != "exact" && opt.mode != "numeric" && opt.mode != "both") {
        throw usage_error("verify: --mode must be exact, numeric or both");
    }
    const rational cutoff = detail::cutoff_of(cfg);
    auto cat = detail::load(cfg);
    ::std::vector<identity> chosen;
    if (opt.all) {
        chosen = cat;
    } else {
        for (const auto &id : opt.ids) {
            const identity *i = find_identity(cat, id);
            if (i == nullptr) {
                throw usage_error("verify: no identity with id '" + id + "'");
            }
            chosen.push_back(*i);
        }
    }
    if (opt.corrupt) {
        for (auto &i : chosen) {
            i = corrupt_identity(::std::move(i), *opt.corrupt);
        }
    }
    ::std::vector<verification_report> reports;
    if (opt.mode != "numeric") {
        reports = verify_all(chosen, cutoff, cfg.jobs);
    }
    if (opt.mode != "exact") {
        const auto plan = make_numeric_plan(cfg.seed, cfg.samples, cfg.tol);
        auto num = run_batch(
            chosen, [&](const identity &i) { return verify_numeric(i, plan); }, cfg.jobs);
        if (reports.empty()) {
            reports = ::std::move(num);
        } else {
            // interleave: exact then numeric for each id
            ::std::vector<verification_report> merged;
            for (::std::size_t k = 0; k < num.size(); ++k) {
                merged.push_back(::std::move(reports[k]));
                merged.push_back(::std::move(num[k]));
            }
            reports = ::std::move(merged);
        }
    }
    const bool ok = batch_passed(reports);
    if (cfg.format == "json") {
        auto j = detail::envelope("verify");
        j["cutoff"] = cutoff.to_fraction_string();
        j["mode"] = opt.mode;
        j["tol"] = cfg.tol;
        j["seed"] = cfg.seed;
        j["samples"] = cfg.samples;
        auto a = ojson::array();
        for (const auto &r : reports) {
            a.push_back(report_to_json(r, cfg.timing));
        }
        j["reports"] = ::std::move(a);
        j["passed"] = ok;
        out << j.dump(2) << "\n";
    } else {
        ::std::size_t pass = 0, fail = 0, error = 0, suspect = 0;
        for (const auto &r : reports) {
            out << ::std::left << ::std::setw(6) << to_string(r.status) << " " << ::std::setw(26) << r.id << " "
                << to_string(r.mode);
            if (r.expected == expected_status::suspect) {
                out << " [suspect]";
                ++suspect;
            }
            if (r.mode == verify_mode::exact && r.cutoff) {
                out << " cutoff " << r.cutoff->to_string();
            }
            if (r.max_residual) {
                out << " max residual " << detail::real_text(*r.max_residual);
            }
            if (!r.residuals.empty()) {
                const auto &[e, c] = r.residuals.front();
                out << " lowest residual (" << c.to_string() << ") x^" << e.x.to_string();
                if (!e.z.is_zero()) {
                    out << " z^" << e.z.to_string();
                }
            }
            if (!r.message.empty()) {
                out << " " << r.message;
            }
            if (cfg.timing) {
                out << " " << detail::real_text(r.elapsed_ms) << " ms";
            }
            out << "\n";
            pass += r.status == verify_status::pass;
            fail += r.status == verify_status::fail;
            error += r.status == verify_status::error;
        }
        out << reports.size() << " reports: " << pass << " pass, " << fail << " fail, " << error << " error ("
            << suspect << " suspect, informational)\n";
    }
    return ok ? 0 : 1;
}

struct expand_options {
    ::std::string eps = "0", epsp = "0", mode = "constant";
    bool product = false;
};

inline int cmd_expand(const run_config &cfg, const expand_options &opt, ::std::ostream &out)
{
    const characteristic c{detail::parse_rational_flag("eps", opt.eps), detail::parse_rational_flag("epsp", opt.epsp)};
    if (opt.mode != "constant" && opt.mode != "function") {
        throw usage_error("expand: --mode must be constant or function");
    }
    const auto mode = opt.mode == "constant" ? theta_mode::constant : theta_mode::function;
    const rational cutoff = detail::cutoff_of(cfg);
    series s;
    if (opt.product) {
        auto [c0, mu] = reduce_char(c);
        s = theta_product_series(c0, mode, cutoff).scaled(mu);
    } else {
        s = theta_series(c, mode, cutoff);
    }
    if (cfg.format == "json") {
        auto j = detail::envelope("expand");
        j["eps"] = c.eps.to_fraction_string();
        j["epsp"] = c.epsp.to_fraction_string();
        j["mode"] = opt.mode;
        j["cutoff"] = cutoff.to_fraction_string();
        j["terms"] = detail::series_terms_json(s);
        j["text"] = s.to_string();
        out << j.dump(2) << "\n";
    } else {
        out << s.to_string() << "\n";
    }
    return 0;
}

struct eval_options {
    ::std::string eps = "0", epsp = "0";
    ::std::string tau = "0,1", zeta = "0";
    ::std::string id;
    bool derivative = false;
};

inline int cmd_eval(const run_config &cfg, const eval_options &opt, ::std::ostream &out)
{
    const auto tau = detail::parse_tau_flag(opt.tau);
    const auto zeta = detail::parse_complex_flag("zeta", opt.zeta);
    if (!opt.id.empty()) {
        const auto cat = detail::load(cfg);
        const identity *i = find_identity(cat, opt.id);
        if (i == nullptr) {
            throw usage_error("eval: no identity with id '" + opt.id + "'");
        }
        const auto z = i->kind == identity_kind::function ? ::std::optional(zeta) : ::std::nullopt;
        const double res = identity_residual<double>(*i, tau, z);
        const bool ok = res < cfg.tol;
        if (cfg.format == "json") {
            auto j = detail::envelope("eval");
            j["id"] = i->id;
            j["tau"] = detail::complex_json(tau);
            j["zeta"] = z ? detail::complex_json(*z) : detail::ojson();
            j["residual"] = res;
            j["passed"] = ok;
            out << j.dump(2) << "\n";
        } else {
            out << i->id << " relative residual " << detail::real_text(res) << (ok ? " (pass)" : " (fail)") << "\n";
        }
        return ok ? 0 : 1;
    }
    const characteristic c{detail::parse_rational_flag("eps", opt.eps), detail::parse_rational_flag("epsp", opt.epsp)};
    const auto v = opt.derivative ? theta_deriv_eval<double>(c, zeta, tau) : theta_eval<double>(c, zeta, tau);
    if (cfg.format == "json") {
        auto j = detail::envelope("eval");
        j["eps"] = c.eps.to_fraction_string();
        j["epsp"] = c.epsp.to_fraction_string();
        j["derivative"] = opt.derivative;
        j["tau"] = detail::complex_json(tau);
        j["zeta"] = detail::complex_json(zeta);
        j["value"] = detail::complex_json(v.value);
        j["error"] = v.error;
        j["terms"] = v.terms;
        out << j.dump(2) << "\n";
    } else {
        out << (opt.derivative ? "theta'" : "theta") << c.to_string() << " = " << detail::complex_text(v.value)
            << "  (error < " << detail::real_text(::std::max(v.error, 1e-300)) << ", " << v.terms << " terms)\n";
    }
    return 0;
}

struct residues_options {
    ::std::string tau = "0.1,1.2";
    ::std::string quotient = "eps15";
    unsigned nodes = 4096;
};

inline int cmd_residues(const run_config &cfg, const residues_options &opt, ::std::ostream &out)
{
    using detail::ojson;
    const auto tau = detail::parse_tau_flag(opt.tau);
    theta_quotient phi;
    try {
        phi = quintic_quotient(opt.quotient);
    } catch (const ::std::invalid_argument &e) {
        throw usage_error(::std::string("residues: ") + e.what());
    }
    const auto poles = phi.poles(tau);
    const double radius = default_radius(phi, tau);
    ::std::complex<double> sum = 0;
    double worst = 0;
    auto rows = ojson::array();
    ::std::ostringstream text;
    for (::std::size_t k = 0; k < poles.size(); ++k) {
        const auto num = numeric_residue<double>(phi, poles[k], tau, radius, opt.nodes);
        const auto form = residue_closed_form(phi, k);
        const auto closed = form.evaluate<double>(tau);
        const double rel = ::std::abs(num - closed) / ::std::abs(closed);
        worst = ::std::max(worst, rel);
        sum += num;
        ojson r;
        r["pole"] = detail::complex_json(poles[k]);
        r["residue"] = detail::complex_json(num);
        r["closed_form"] = form.to_string();
        r["closed_value"] = detail::complex_json(closed);
        r["relative_difference"] = rel;
        rows.push_back(::std::move(r));
        text << "pole " << detail::complex_text(poles[k]) << ": residue " << detail::complex_text(num) << "\n  closed form "
             << form.to_string() << " = " << detail::complex_text(closed) << " (rel. diff "
             << detail::real_text(rel) << ")\n";
    }
    const bool ok = ::std::abs(sum) < 1e-8 && worst < 1e-8;
    if (cfg.format == "json") {
        auto j = detail::envelope("residues");
        j["quotient"] = opt.quotient;
        j["tau"] = detail::complex_json(tau);
        j["radius"] = radius;
        j["nodes"] = opt.nodes;
        j["residues"] = ::std::move(rows);
        j["sum"] = detail::complex_json(sum);
        j["sum_abs"] = ::std::abs(sum);
        j["passed"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << text.str() << "sum of residues " << detail::complex_text(sum) << " (|sum| = "
            << detail::real_text(::std::abs(sum)) << ")\n";
    }
    return ok ? 0 : 1;
}

struct discover_options {
    ::std::string id = "three-theta-j1-k5";
    ::std::string tau = "0.3,1.1";
    ::std::size_t z_samples = 0;
    double threshold = 1e-8;
};

// Uses the zeta-dependent part of each term of a function identity as the
// monomial list.
inline int cmd_discover(const run_config &cfg, const discover_options &opt, ::std::ostream &out)
{
    using detail::ojson;
    const auto tau = detail::parse_tau_flag(opt.tau);
    const auto cat = detail::load(cfg);
    const identity *i = find_identity(cat, opt.id);
    if (i == nullptr) {
        throw usage_error("discover: no identity with id '" + opt.id + "'");
    }
    if (i->kind != identity_kind::function) {
        throw usage_error("discover: identity '" + opt.id + "' has no zeta-dependent factors");
    }
    ::std::vector<identity_term> monomials;
    for (const auto &t : i->terms) {
        identity_term m;
        m.scalar = cyclotomic(1);
        for (const auto &f : t.factors) {
            if (f.arg == theta_arg::zeta) {
                m.factors.push_back(f);
            }
        }
        monomials.push_back(::std::move(m));
    }
    const auto n = opt.z_samples != 0u ? opt.z_samples : 4 * monomials.size();
    const auto r = discover_relations(monomials, tau, n, opt.threshold);
    if (cfg.format == "json") {
        auto j = detail::envelope("discover");
        j["id"] = i->id;
        j["tau"] = detail::complex_json(tau);
        j["z_samples"] = n;
        j["threshold"] = opt.threshold;
        j["nullity"] = r.nullity;
        j["singular_values"] = r.singular_values;
        auto cs = ojson::array();
        for (const auto &c : r.coefficients) {
            cs.push_back(detail::complex_json(c));
        }
        j["coefficients"] = ::std::move(cs);
        out << j.dump(2) << "\n";
    } else {
        out << "monomials of " << i->id << " at tau = " << detail::complex_text(tau) << ", " << n
            << " zeta samples\nsingular values:";
        for (double s : r.singular_values) {
            out << " " << detail::real_text(s);
        }
        out << "\nnullity " << r.nullity << "\n";
        for (const auto &c : r.coefficients) {
            out << "  " << detail::complex_text(c) << "\n";
        }
    }
    return 0;
}

inline int cmd_sigma(const run_config &cfg, ::std::int64_t max_n, ::std::ostream &out)
{
    if (max_n < 0) {
        throw usage_error("sigma: --max-n must be nonnegative");
    }
    const auto r = verify_sigma_convolution(max_n);
    if (cfg.format == "json") {
        auto j = detail::envelope("sigma");
        j["max_n"] = max_n;
        j["failures"] = r.failures;
        j["passed"] = r.passed();
        out << j.dump(2) << "\n";
    } else {
        out << "sigma(3n+2) = 3 sum delta(3k+1) delta(3(n-k)+1) for 0 <= n <= " << max_n << ": "
            << (r.passed() ? "no failures" : ::std::to_string(r.failures.size()) + " failures") << "\n";
    }
    return r.passed() ? 0 : 1;
}

struct resultant_options {
    ::std::string f, g;
    ::std::string tau;
};

inline int cmd_resultant(const run_config &cfg, const resultant_options &opt, ::std::ostream &out)
{
    if (!opt.tau.empty()) {
        if (!opt.f.empty() || !opt.g.empty()) {
            throw usage_error("resultant: --tau builds the theta quadratics; do not pass --f/--g with it");
        }
        const auto tau = detail::parse_tau_flag(opt.tau);
        const auto [f, g] = theta_quadratics(tau);
        const auto r = resultant_2x2(f, g);
        const double scale = coefficient_scale(f, g);
        const double bound = 1e-8 * ::std::pow(scale, 4);
        const bool ok = ::std::abs(r) < bound;
        if (cfg.format == "json") {
            auto j = detail::envelope("resultant");
            j["tau"] = detail::complex_json(tau);
            j["resultant"] = detail::complex_json(r);
            j["scale"] = scale;
            j["bound"] = bound;
            j["passed"] = ok;
            out << j.dump(2) << "\n";
        } else {
            out << "R(f,g) = " << detail::complex_text(r) << " (bound " << detail::real_text(bound) << ")\n";
        }
        return ok ? 0 : 1;
    }
    if (opt.f.empty() || opt.g.empty()) {
        throw usage_error("resultant: pass --f and --g (leading coefficient first), or --tau");
    }
    const auto f = poly<cyclotomic>::from_leading(detail::parse_coefficients("f", opt.f));
    const auto g = poly<cyclotomic>::from_leading(detail::parse_coefficients("g", opt.g));
    if (f.degree() < 1 || g.degree() < 1) {
        throw usage_error("resultant: both polynomials need degree at least 1");
    }
    const auto r = resultant(f, g).reduced();
    if (cfg.format == "json") {
        auto j = detail::envelope("resultant");
        j["f"] = opt.f;
        j["g"] = opt.g;
        j["resultant"] = r.to_string();
        if (f.degree() == 2 && g.degree() == 2) {
            j["closed_form"] = resultant_2x2(f, g).reduced().to_string();
        }
        out << j.dump(2) << "\n";
    } else {
        out << r.to_string() << "\n";
    }
    return 0;
}

// Entry point: returns the process exit code (0 ok, 1 check failed, 2 usage).
inline int run_cli(int argc, const char *const *argv, ::std::ostream &out, ::std::ostream &err)
{
    CLI::App app{"Exact and numeric checks of level-5 theta-constant identities", "qtheta"};
    app.require_subcommand(1);
    app.fallthrough();
    run_config cfg;
    app.add_option("--cutoff", cfg.cutoff, "series cutoff p/q")->capture_default_str();
    app.add_option("--tol", cfg.tol, "numeric residual threshold")->capture_default_str();
    app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    app.add_option("--samples", cfg.samples, "number of sampled tau")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--catalog", cfg.catalog_path, "catalog JSON file (default: builtin)");
    app.add_option("--format", cfg.format, "json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", cfg.timing, "report elapsed times");

    verify_options vo;
    auto *verify = app.add_subcommand("verify", "verify catalog identities");
    verify->add_option("--id", vo.ids, "identity id (repeatable)");
    verify->add_flag("--all", vo.all, "every identity");
    verify->add_option("--mode", vo.mode, "exact, numeric or both")->capture_default_str();
    verify->add_option("--corrupt", vo.corrupt, "negate one term per identity, chosen by this seed");

    expand_options xo;
    auto *expand = app.add_subcommand("expand", "print a theta series");
    expand->add_option("--eps", xo.eps)->capture_default_str();
    expand->add_option("--epsp", xo.epsp)->capture_default_str();
    expand->add_option("--mode", xo.mode, "constant or function")->capture_default_str();
    expand->add_flag("--product", xo.product, "use the triple product");

    eval_options eo;
    auto *eval = app.add_subcommand("eval", "evaluate a theta function or an identity residual");
    eval->add_option("--eps", eo.eps)->capture_default_str();
    eval->add_option("--epsp", eo.epsp)->capture_default_str();
    eval->add_option("--tau", eo.tau, "re,im")->capture_default_str();
    eval->add_option("--zeta", eo.zeta, "re,im")->capture_default_str();
    eval->add_option("--id", eo.id, "identity id: print its relative residual");
    eval->add_flag("--deriv", eo.derivative, "derivative in zeta");

    residues_options ro;
    auto *residues = app.add_subcommand("residues", "contour residues of a quintic quotient");
    residues->add_option("--tau", ro.tau, "re,im")->capture_default_str();
    residues->add_option("--quotient", ro.quotient, "eps15, eps35, epsp15 or epsp35")->capture_default_str();
    residues->add_option("--nodes", ro.nodes, "trapezoid nodes")->capture_default_str()->check(CLI::Range(8u, 1u << 20));

    discover_options dopt;
    auto *discover = app.add_subcommand("discover", "numeric nullspace of an identity's monomials");
    discover->add_option("--id", dopt.id, "function identity supplying the monomials")->capture_default_str();
    discover->add_option("--tau", dopt.tau, "re,im")->capture_default_str();
    discover->add_option("--z-samples", dopt.z_samples, "zeta grid size (default 4 per monomial)");
    discover->add_option("--threshold", dopt.threshold, "relative singular value threshold")->capture_default_str();

    ::std::int64_t max_n = 500;
    auto *sig = app.add_subcommand("sigma", "check the divisor convolution");
    sig->add_option("--max-n", max_n)->capture_default_str();

    resultant_options so;
    auto *res = app.add_subcommand("resultant", "resultant of two polynomials");
    res->add_option("--f", so.f, "coefficients, leading first, comma separated");
    res->add_option("--g", so.g, "coefficients, leading first, comma separated");
    res->add_option("--tau", so.tau, "use the theta quadratics at this tau");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "qtheta: " << e.what() << "\n";
        return 2;
    }
    try {
        if (verify->parsed()) {
            return cmd_verify(cfg, vo, out);
        }
        if (expand->parsed()) {
            return cmd_expand(cfg, xo, out);
        }
        if (eval->parsed()) {
            return cmd_eval(cfg, eo, out);
        }
        if (residues->parsed()) {
            return cmd_residues(cfg, ro, out);
        }
        if (discover->parsed()) {
            return cmd_discover(cfg, dopt, out);
        }
        if (sig->parsed()) {
            return cmd_sigma(cfg, max_n, out);
        }
        if (res->parsed()) {
            return cmd_resultant(cfg, so, out);
        }
    } catch (const usage_error &e) {
        err << "qtheta: " << e.what() << "\n";
        return 2;
    } catch (const catalog_error &e) {
        err << "qtheta: " << e.what() << "\n";
        return 2;
    } catch (const ::std::exception &e) {
        err << "qtheta: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace qtheta

#endif
