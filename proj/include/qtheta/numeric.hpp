// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_NUMERIC_HPP
#define QTHETA_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qtheta/catalog.hpp>
#include <qtheta/cyclotomic.hpp>
#include <qtheta/rational.hpp>
#include <qtheta/theta.hpp>

namespace qtheta
{

class numeric_error : public ::std::runtime_error
{
public:
    using ::std::runtime_error::runtime_error;
};

struct eval_config {
    // Target absolute truncation error of one theta sum.
    double tol = 1e-17;
    unsigned max_terms = 400;
    // Informational; the arithmetic is that of the Real parameter.
    unsigned digits = 16;
};

template <typename Real>
struct theta_value {
    ::std::complex<Real> value;
    Real error = 0;
    unsigned terms = 0;
};

namespace detail
{

inline void check_tau_config(const ::std::complex<long double> &tau, const eval_config &cfg)
{
    if (!(tau.imag() > 0)) {
        throw ::std::invalid_argument("theta evaluation needs Im(tau) > 0");
    }
    if (!(cfg.tol > 0) || cfg.max_terms < 8u) {
        throw ::std::invalid_argument("eval_config: need tol > 0 and max_terms >= 8");
    }
}

// Sum over k = n + eps/2 of weight(k) exp(pi i k eps' + pi i k^2 tau + 2 pi i k zeta),
// walking outwards from the largest term until a term drops below tol/100.
template <typename Real, typename Weight>
theta_value<Real> theta_sum(const characteristic &c, ::std::complex<Real> zeta, ::std::complex<Real> tau,
                            const eval_config &cfg, Weight weight)
{
    check_tau_config({static_cast<long double>(tau.real()), static_cast<long double>(tau.imag())}, cfg);
    const Real pi = ::std::numbers::pi_v<Real>;
    const Real half = static_cast<Real>(c.eps.to_long_double()) / 2;
    const Real ep = static_cast<Real>(c.epsp.to_long_double());
    const Real stop = static_cast<Real>(cfg.tol) / 100;
    auto term = [&](::std::int64_t n, Real &mag) {
        const Real k = static_cast<Real>(n) + half;
        const Real logm = -pi * k * k * tau.imag() - 2 * pi * k * zeta.imag();
        const Real arg = pi * k * ep + pi * k * k * tau.real() + 2 * pi * k * zeta.real();
        mag = ::std::exp(logm);
        return weight(k) * ::std::polar(mag, arg);
    };
    const auto n0 = static_cast<::std::int64_t>(::std::llround(-zeta.imag() / tau.imag() - half));
    theta_value<Real> r;
    Real mag = 0;
    r.value = term(n0, mag);
    r.terms = 1;
    Real omitted = 0;
    for (int dir : {1, -1}) {
        for (::std::int64_t d = 1;; ++d) {
            if (r.terms >= cfg.max_terms) {
                throw numeric_error("theta sum did not reach tolerance within " + ::std::to_string(cfg.max_terms)
                                    + " terms");
            }
            const auto v = term(n0 + dir * d, mag);
            if (mag * ::std::abs(weight(static_cast<Real>(n0 + dir * d) + half)) < stop && mag < stop) {
                omitted += mag;
                break;
            }
            r.value += v;
            ++r.terms;
        }
    }
    // Beyond the first omitted term the sum decays faster than geometrically.
    r.error = 2 * omitted;
    return r;
}

} // namespace detail

// theta[c](zeta, tau) by direct summation.
template <typename Real = double>
theta_value<Real> theta_eval(const characteristic &c, ::std::complex<Real> zeta, ::std::complex<Real> tau,
                             const eval_config &cfg = {})
{
    return detail::theta_sum<Real>(c, zeta, tau, cfg, [](Real) { return ::std::complex<Real>(1); });
}

// d/dzeta theta[c](zeta, tau): termwise factor 2 pi i k.
template <typename Real = double>
theta_value<Real> theta_deriv_eval(const characteristic &c, ::std::complex<Real> zeta, ::std::complex<Real> tau,
                                   const eval_config &cfg = {})
{
    const Real two_pi = 2 * ::std::numbers::pi_v<Real>;
    return detail::theta_sum<Real>(c, zeta, tau, cfg,
                                   [two_pi](Real k) { return ::std::complex<Real>(0, two_pi * k); });
}

// Value of one term; constants taken at zeta = 0.
template <typename Real = double>
::std::complex<Real> term_value(const identity_term &t, ::std::complex<Real> zeta, ::std::complex<Real> tau,
                                const eval_config &cfg = {})
{
    ::std::complex<Real> v = t.scalar.template embed_as<Real>();
    for (const auto &f : t.factors) {
        const auto z = f.arg == theta_arg::zeta ? zeta : ::std::complex<Real>(0);
        const auto th = theta_eval<Real>(f.ch, z, tau, cfg).value;
        for (unsigned p = 0; p < f.power; ++p) {
            v *= th;
        }
    }
    return v;
}

// |sum of terms| / max |term|; 0 when every term vanishes.
template <typename Real = double>
Real identity_residual(const identity &i, ::std::complex<Real> tau, ::std::optional<::std::complex<Real>> zeta,
                       const eval_config &cfg = {})
{
    if ((i.kind == identity_kind::function) != zeta.has_value()) {
        throw ::std::invalid_argument("identity_residual: zeta is required exactly for function identities");
    }
    const auto z = zeta.value_or(::std::complex<Real>(0));
    ::std::complex<Real> sum = 0;
    Real big = 0;
    for (const auto &t : i.terms) {
        const auto v = term_value<Real>(t, z, tau, cfg);
        sum += v;
        big = ::std::max(big, ::std::abs(v));
    }
    return big == 0 ? Real(0) : ::std::abs(sum) / big;
}

// |theta[c](zeta0, tau)| at the zero zeta0 = (1 - eps)/2 tau + (1 - eps')/2.
template <typename Real = double>
Real zero_location_check(const characteristic &c, ::std::complex<Real> tau, const eval_config &cfg = {})
{
    const auto [a, b] = theta_zero_point(c);
    const ::std::complex<Real> z0 = static_cast<Real>(a.to_long_double()) * tau + static_cast<Real>(b.to_long_double());
    return ::std::abs(theta_eval<Real>(c, z0, tau, cfg).value);
}

// Deterministic points with Re in [-0.5, 0.5] and Im in [0.8, 2.0].
inline ::std::vector<::std::complex<double>> sample_tau(::std::uint64_t seed, ::std::size_t count)
{
    if (count < 1u) {
        throw ::std::invalid_argument("sample_tau: count must be positive");
    }
    ::std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    ::std::vector<::std::complex<double>> out;
    out.reserve(count);
    for (::std::size_t k = 0; k < count; ++k) {
        const double re = unit() - 0.5;
        const double im = 0.8 + 1.2 * unit();
        out.emplace_back(re, im);
    }
    return out;
}

// Deterministic zeta samples with Re in [-0.5, 0.5] and Im in [-0.3, 0.3].
inline ::std::vector<::std::complex<double>> sample_zeta(::std::uint64_t seed, ::std::size_t count)
{
    ::std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    ::std::vector<::std::complex<double>> out;
    for (::std::size_t k = 0; k < count; ++k) {
        const double re = unit() - 0.5;
        const double im = 0.6 * unit() - 0.3;
        out.emplace_back(re, im);
    }
    return out;
}

// phi(z) = prod numerator theta[c](z)^p / prod denominator theta[c](z)^p.
struct theta_quotient {
    ::std::vector<::std::pair<characteristic, unsigned>> numerator;
    ::std::vector<::std::pair<characteristic, unsigned>> denominator;

    template <typename Real = double>
    ::std::complex<Real> operator()(::std::complex<Real> z, ::std::complex<Real> tau, const eval_config &cfg = {}) const
    {
        ::std::complex<Real> v = 1;
        for (const auto &[c, p] : numerator) {
            v *= ::std::pow(theta_eval<Real>(c, z, tau, cfg).value, static_cast<int>(p));
        }
        for (const auto &[c, p] : denominator) {
            v /= ::std::pow(theta_eval<Real>(c, z, tau, cfg).value, static_cast<int>(p));
        }
        return v;
    }

    // The zeros of the denominator factors, one per factor, at
    // (1 - eps)/2 tau + (1 - eps')/2.
    template <typename Real = double>
    ::std::vector<::std::complex<Real>> poles(::std::complex<Real> tau) const
    {
        ::std::vector<::std::complex<Real>> out;
        for (const auto &[c, p] : denominator) {
            const auto [a, b] = theta_zero_point(c);
            out.push_back(static_cast<Real>(a.to_long_double()) * tau + static_cast<Real>(b.to_long_double()));
        }
        return out;
    }
};

// 0.02 times the smallest distance between two listed poles.
template <typename Real = double>
Real default_radius(const theta_quotient &phi, ::std::complex<Real> tau)
{
    const auto ps = phi.poles(tau);
    Real m = ::std::numeric_limits<Real>::infinity();
    for (::std::size_t i = 0; i < ps.size(); ++i) {
        for (::std::size_t j = i + 1; j < ps.size(); ++j) {
            m = ::std::min(m, ::std::abs(ps[i] - ps[j]));
        }
    }
    if (!::std::isfinite(m)) {
        m = ::std::min(Real(1), tau.imag());
    }
    return Real(0.02) * m;
}

// (1 / 2 pi i) times the contour integral of phi over the circle |z - pole| = radius,
// by the trapezoid rule with `samples` nodes.
template <typename Real = double>
::std::complex<Real> numeric_residue(const theta_quotient &phi, ::std::complex<Real> pole, ::std::complex<Real> tau,
                                     Real radius, unsigned samples = 4096, const eval_config &cfg = {})
{
    if (!(radius > 0) || samples < 8u) {
        throw ::std::invalid_argument("numeric_residue: need radius > 0 and at least 8 samples");
    }
    // Every other pole, lattice translates included, must stay well outside.
    for (const auto &p : phi.poles(tau)) {
        for (int m = -2; m <= 2; ++m) {
            for (int n = -2; n <= 2; ++n) {
                const auto q = p + static_cast<Real>(m) + static_cast<Real>(n) * tau;
                const Real d = ::std::abs(q - pole);
                if (d > radius * Real(1e-6) && d < 2 * radius) {
                    throw numeric_error("numeric_residue: another pole lies within twice the radius");
                }
            }
        }
    }
    const Real two_pi = 2 * ::std::numbers::pi_v<Real>;
    ::std::complex<Real> acc = 0;
    for (unsigned j = 0; j < samples; ++j) {
        const auto w = ::std::polar(Real(1), two_pi * static_cast<Real>(j) / static_cast<Real>(samples));
        acc += phi(pole + radius * w, tau, cfg) * w;
    }
    return acc * radius / static_cast<Real>(samples);
}

// A residue written through theta constants:
//   scalar * exp(pi i tau_power tau) * prod theta[c](0)^power / theta'[1;1](0).
struct residue_form {
    cyclotomic scalar;
    rational tau_power;
    ::std::vector<::std::pair<characteristic, int>> constants;

    template <typename Real = double>
    ::std::complex<Real> evaluate(::std::complex<Real> tau, const eval_config &cfg = {}) const
    {
        const Real pi = ::std::numbers::pi_v<Real>;
        ::std::complex<Real> v = scalar.template embed_as<Real>();
        v *= ::std::exp(::std::complex<Real>(0, pi * static_cast<Real>(tau_power.to_long_double())) * tau);
        for (const auto &[c, p] : constants) {
            v *= ::std::pow(theta_eval<Real>(c, ::std::complex<Real>(0), tau, cfg).value, p);
        }
        return v / theta_deriv_eval<Real>({rational(1), rational(1)}, ::std::complex<Real>(0), tau, cfg).value;
    }
    ::std::string to_string() const
    {
        ::std::string s = "(" + scalar.to_string() + ")";
        if (!tau_power.is_zero()) {
            s += " x^" + tau_power.to_string();
        }
        for (const auto &[c, p] : constants) {
            s += " T" + c.to_string() + "^" + ::std::to_string(p);
        }
        return s + " / T'[1;1]";
    }
};

namespace detail
{

// theta[c](0) = mu theta[c0](0) with c0 the smaller of the reduced c and
// reduced -c (constants are even in zeta).
inline ::std::pair<characteristic, cyclotomic> canonical_constant(const characteristic &c)
{
    auto p = reduce_char(c);
    auto q = reduce_char(-c);
    return q.first < p.first ? q : p;
}

} // namespace detail

// Closed form of the residue of phi at the zero of denominator factor k,
// from theta[c](zeta + b + a tau) =
//   exp(-pi i a (eps' + 2b)) x^(-a^2) z^(-a) theta[eps + 2a; eps' + 2b](zeta).
inline residue_form residue_closed_form(const theta_quotient &phi, ::std::size_t k)
{
    if (k >= phi.denominator.size()) {
        throw ::std::out_of_range("residue_closed_form: no such denominator factor");
    }
    const auto &[c0, p0] = phi.denominator[k];
    if (p0 != 1u) {
        throw ::std::invalid_argument("residue_closed_form: the pole is not simple");
    }
    const auto [a, b] = theta_zero_point(c0);
    residue_form r{cyclotomic(1), rational(0), {}};
    ::std::map<characteristic, int> powers;
    auto shift = [&](const characteristic &c, int sign, int power) {
        r.scalar = r.scalar * cyclotomic::unit(-a * (c.epsp + rational(2) * b) / rational(2) * rational(sign * power));
        r.tau_power = r.tau_power - a * a * rational(sign * power);
        return characteristic{c.eps + rational(2) * a, c.epsp + rational(2) * b};
    };
    auto constant = [&](const characteristic &c, int power) {
        auto [cc, mu] = detail::canonical_constant(c);
        if (cc == characteristic{rational(1), rational(1)}) {
            if (power > 0) {
                r.scalar = cyclotomic(0);
                return;
            }
            throw ::std::invalid_argument("residue_closed_form: the pole is not simple");
        }
        r.scalar = r.scalar * (power > 0 ? mu : mu.inverse());
        for (int j = 1; j < ::std::abs(power); ++j) {
            r.scalar = r.scalar * (power > 0 ? mu : mu.inverse());
        }
        powers[cc] += power;
    };
    for (const auto &[c, p] : phi.numerator) {
        constant(shift(c, 1, static_cast<int>(p)), static_cast<int>(p));
    }
    for (::std::size_t j = 0; j < phi.denominator.size(); ++j) {
        const auto &[c, p] = phi.denominator[j];
        if (j == k) {
            // derivative of the vanishing factor: theta'[1;1](0) times the shift factor
            shift(c, -1, 1);
            continue;
        }
        constant(shift(c, -1, static_cast<int>(p)), -static_cast<int>(p));
    }
    for (const auto &[c, p] : powers) {
        if (p != 0) {
            r.constants.emplace_back(c, p);
        }
    }
    r.scalar = r.scalar.compact();
    return r;
}

// theta^5[1;1](z) over the five factors theta[e; e'] of one quintic family:
// "eps15"/"eps35" fix eps and run over eps' = 1/5 ... 9/5, "epsp15"/"epsp35"
// fix eps' and run over eps.
inline theta_quotient quintic_quotient(const ::std::string &name)
{
    theta_quotient q;
    q.numerator.push_back({{rational(1), rational(1)}, 5u});
    const bool over_epsp = name == "eps15" || name == "eps35";
    if (!over_epsp && name != "epsp15" && name != "epsp35") {
        throw ::std::invalid_argument("unknown quintic quotient '" + name + "'");
    }
    const rational fixed = name.back() == '5' && name[name.size() - 2] == '1' ? rational(1, 5) : rational(3, 5);
    for (::std::int64_t k : {1, 3, 5, 7, 9}) {
        const rational v(k, 5);
        q.denominator.push_back({over_epsp ? characteristic{fixed, v} : characteristic{v, fixed}, 1u});
    }
    return q;
}

inline const ::std::vector<::std::string> &quintic_quotient_names()
{
    static const ::std::vector<::std::string> names = {"eps15", "eps35", "epsp15", "epsp35"};
    return names;
}

} // namespace qtheta

#endif
