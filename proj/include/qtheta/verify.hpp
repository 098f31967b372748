// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_VERIFY_HPP
#define QTHETA_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <complex>
#include <cstdint>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include <qtheta/catalog.hpp>
#include <qtheta/numeric.hpp>
#include <qtheta/puiseux.hpp>
#include <qtheta/rational.hpp>
#include <qtheta/theta.hpp>

namespace qtheta
{

enum class verify_mode { exact, numeric };
enum class verify_status { pass, fail, error };

inline ::std::string to_string(verify_mode m)
{
    return m == verify_mode::exact ? "exact" : "numeric";
}
inline ::std::string to_string(verify_status s)
{
    switch (s) {
    case verify_status::pass:
        return "pass";
    case verify_status::fail:
        return "fail";
    default:
        return "error";
    }
}

struct verification_report {
    ::std::string id;
    verify_mode mode = verify_mode::exact;
    expected_status expected = expected_status::holds;
    ::std::optional<rational> cutoff;
    verify_status status = verify_status::pass;
    // Lowest surviving terms (exact mode), at most max_residuals of them.
    ::std::vector<series::term> residuals;
    // Numeric mode: worst relative residual and how many points were used.
    ::std::optional<double> max_residual;
    ::std::optional<double> min_residual;
    ::std::size_t points = 0;
    ::std::string message;
    double elapsed_ms = 0;

    bool passed() const
    {
        return status == verify_status::pass;
    }
    // A batch fails on this report only if it is a non-suspect non-pass.
    bool blocks_batch() const
    {
        return expected == expected_status::holds && status != verify_status::pass;
    }
};

inline constexpr ::std::size_t max_residuals = 10;

namespace detail
{

inline theta_mode mode_of(theta_arg a)
{
    return a == theta_arg::zeta ? theta_mode::function : theta_mode::constant;
}

// Powers of factor series for one verification, computed once each.
class power_table
{
    rational cutoff_;
    ::std::map<::std::tuple<characteristic, int, unsigned>, series> pow_;

public:
    explicit power_table(rational cutoff) : cutoff_(::std::move(cutoff)) {}

    const series &get(const theta_factor &f)
    {
        const auto key = ::std::make_tuple(f.ch, static_cast<int>(f.arg), f.power);
        if (auto it = pow_.find(key); it != pow_.end()) {
            return it->second;
        }
        series s;
        if (f.power == 1u) {
            s = *theta_cache::global().value(f.ch, mode_of(f.arg), cutoff_);
        } else {
            // Build from the next lower power already in the table.
            theta_factor g = f;
            g.power = f.power / 2u;
            const series half = get(g);
            s = multiply_to(half, half, cutoff_);
            if (f.power % 2u == 1u) {
                g.power = 1u;
                s = multiply_to(s, get(g), cutoff_);
            }
        }
        return pow_.emplace(key, ::std::move(s)).first->second;
    }
};

} // namespace detail

// Exact check: expands sum scalar * prod theta^power as a series through
// x^cutoff and passes iff every coefficient vanishes.
inline verification_report verify_exact(const identity &i, const rational &cutoff)
{
    const auto t0 = ::std::chrono::steady_clock::now();
    verification_report r;
    r.id = i.id;
    r.mode = verify_mode::exact;
    r.expected = i.expected;
    r.cutoff = cutoff;
    if (cutoff.sign() <= 0) {
        throw ::std::invalid_argument("verify_exact: cutoff must be positive");
    }
    for (const auto &t : i.terms) {
        for (const auto &f : t.factors) {
            const rational lowest = detail::min_square(f.ch.eps / rational(2));
            if (lowest > cutoff) {
                throw precision_error("verify_exact: " + i.id + ": cutoff " + cutoff.to_string()
                                      + " is below the lowest exponent " + lowest.to_string() + " of theta"
                                      + f.ch.to_string());
            }
        }
    }
    detail::power_table powers(cutoff);
    series total(cutoff);
    for (const auto &t : i.terms) {
        ::std::optional<series> prod;
        for (const auto &f : t.factors) {
            const series &p = powers.get(f);
            prod = prod ? multiply_to(*prod, p, cutoff) : p;
        }
        series term = prod ? prod->scaled(t.scalar) : series::one(cutoff).scaled(t.scalar);
        total = total + term;
    }
    total = total.truncated(cutoff);
    if (!total.is_zero()) {
        r.status = verify_status::fail;
        const auto &ts = total.terms();
        for (::std::size_t k = 0; k < ts.size() && k < max_residuals; ++k) {
            r.residuals.push_back(ts[k]);
        }
    }
    r.elapsed_ms = ::std::chrono::duration<double, ::std::milli>(::std::chrono::steady_clock::now() - t0).count();
    return r;
}

struct numeric_plan {
    ::std::vector<::std::complex<double>> taus;
    // zeta samples per tau, function identities only
    ::std::size_t zetas_per_tau = 5;
    ::std::uint64_t seed = 0;
    double threshold = 1e-9;
    eval_config eval;
};

inline numeric_plan make_numeric_plan(::std::uint64_t seed, ::std::size_t samples, double threshold)
{
    numeric_plan p;
    p.taus = sample_tau(seed, samples);
    p.seed = seed;
    p.threshold = threshold;
    return p;
}

// Relative residuals at every planned point, in sample order (tau-major).
inline ::std::vector<double> numeric_residuals(const identity &i, const numeric_plan &plan)
{
    ::std::vector<double> out;
    for (::std::size_t k = 0; k < plan.taus.size(); ++k) {
        if (i.kind == identity_kind::constant) {
            out.push_back(identity_residual<double>(i, plan.taus[k], ::std::nullopt, plan.eval));
        } else {
            for (const auto &z : sample_zeta(plan.seed + k, plan.zetas_per_tau)) {
                out.push_back(identity_residual<double>(i, plan.taus[k], z, plan.eval));
            }
        }
    }
    return out;
}

// Passes iff every relative residual is below plan.threshold.
inline verification_report verify_numeric(const identity &i, const numeric_plan &plan)
{
    const auto t0 = ::std::chrono::steady_clock::now();
    verification_report r;
    r.id = i.id;
    r.mode = verify_mode::numeric;
    r.expected = i.expected;
    const auto res = numeric_residuals(i, plan);
    r.points = res.size();
    if (!res.empty()) {
        r.max_residual = *::std::max_element(res.begin(), res.end());
        r.min_residual = *::std::min_element(res.begin(), res.end());
    }
    r.status = r.max_residual && *r.max_residual < plan.threshold ? verify_status::pass : verify_status::fail;
    r.elapsed_ms = ::std::chrono::duration<double, ::std::milli>(::std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Runs check(identity) for every entry, on up to `jobs` threads, and returns
// the reports ordered by id. Exceptions become status "error".
template <typename Check>
::std::vector<verification_report> run_batch(const ::std::vector<identity> &cat, Check &&check, unsigned jobs)
{
    ::std::vector<const identity *> order;
    for (const auto &i : cat) {
        order.push_back(&i);
    }
    ::std::sort(order.begin(), order.end(), [](const identity *a, const identity *b) { return a->id < b->id; });
    ::std::vector<verification_report> out(order.size());
    ::std::atomic<::std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const auto k = next.fetch_add(1);
            if (k >= order.size()) {
                return;
            }
            const identity &i = *order[k];
            try {
                out[k] = check(i);
            } catch (const ::std::exception &e) {
                verification_report r;
                r.id = i.id;
                r.expected = i.expected;
                r.status = verify_status::error;
                r.message = e.what();
                out[k] = ::std::move(r);
            }
        }
    };
    jobs = ::std::max(1u, ::std::min<unsigned>(jobs, static_cast<unsigned>(order.size())));
    if (jobs <= 1u) {
        worker();
    } else {
        ::std::vector<::std::thread> pool;
        for (unsigned k = 0; k < jobs; ++k) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    return out;
}

inline unsigned default_jobs()
{
    return ::std::max(1u, ::std::thread::hardware_concurrency());
}

inline ::std::vector<verification_report> verify_all(const ::std::vector<identity> &cat, const rational &cutoff,
                                                     unsigned jobs = default_jobs())
{
    return run_batch(
        cat, [&](const identity &i) { return verify_exact(i, cutoff); }, jobs);
}

// True iff no non-suspect identity failed or errored.
inline bool batch_passed(const ::std::vector<verification_report> &rs)
{
    return ::std::none_of(rs.begin(), rs.end(), [](const verification_report &r) { return r.blocks_batch(); });
}

inline nlohmann::ordered_json report_to_json(const verification_report &r, bool timing = false)
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["mode"] = to_string(r.mode);
    j["cutoff"] = r.cutoff ? nlohmann::ordered_json(r.cutoff->to_fraction_string()) : nlohmann::ordered_json();
    j["status"] = to_string(r.status);
    j["expected"] = to_string(r.expected);
    auto res = nlohmann::ordered_json::array();
    for (const auto &[e, c] : r.residuals) {
        nlohmann::ordered_json t;
        t["x"] = e.x.to_fraction_string();
        t["z"] = e.z.to_fraction_string();
        t["coeff"] = c.to_string();
        res.push_back(::std::move(t));
    }
    j["residuals"] = ::std::move(res);
    if (r.mode == verify_mode::numeric) {
        j["max_residual"] = r.max_residual ? nlohmann::ordered_json(*r.max_residual) : nlohmann::ordered_json();
        j["min_residual"] = r.min_residual ? nlohmann::ordered_json(*r.min_residual) : nlohmann::ordered_json();
        j["points"] = r.points;
    }
    if (!r.message.empty()) {
        j["message"] = r.message;
    }
    j["elapsed_ms"] = timing ? nlohmann::ordered_json(r.elapsed_ms) : nlohmann::ordered_json();
    return j;
}

} // namespace qtheta

#endif
