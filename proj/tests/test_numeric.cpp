// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.


#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include <catch_amalgamated.hpp>

#include <qtheta/numeric.hpp>

using namespace qtheta;
using cplx = ::std::complex<double>;

namespace
{

characteristic ch(long a, long b, long c, long d)
{
    return {rational(a, b), rational(c, d)};
}

const identity &builtin(const char *id)
{
    const identity *i = find_identity(builtin_catalog(), id);
    REQUIRE(i != nullptr);
    return *i;
}

::std::vector<characteristic> catalog_chars()
{
    ::std::vector<characteristic> r;
    for (long e : {1, 3}) {
        for (long k : {1, 3, 5, 7, 9}) {
            r.push_back(ch(e, 5, k, 5));
        }
    }
    for (auto c : {ch(1, 1, 1, 5), ch(1, 1, 3, 5), ch(0, 1, 0, 1), ch(1, 1, 0, 1), ch(0, 1, 1, 1), ch(1, 1, 1, 1)}) {
        r.push_back(c);
    }
    return r;
}

// theta[c](0, tau) and its zeta-derivative by plain summation over |n| <= 40.
cplx oracle_theta(double eps, double epsp, cplx tau, bool deriv = false)
{
    const double pi = ::std::numbers::pi;
    cplx s = 0;
    for (int n = -40; n <= 40; ++n) {
        const double k = n + eps / 2;
        cplx t = ::std::exp(cplx(0, pi * k * epsp) + cplx(0, pi) * k * k * tau);
        s += deriv ? cplx(0, 2 * pi * k) * t : t;
    }
    return s;
}

} // namespace

TEST_CASE("theta values at tau = i")
{
    long double s00 = 0, s01 = 0;
    for (int n = -30; n <= 30; ++n) {
        const long double t = ::std::exp(-::std::numbers::pi_v<long double> * n * n);
        s00 += t;
        s01 += (n % 2 == 0 ? 1 : -1) * t;
    }
    const cplx i(0, 1);
    CHECK(::std::abs(theta_eval<double>(ch(0, 1, 0, 1), 0, i).value - cplx(double(s00))) < 1e-15);
    CHECK(::std::abs(theta_eval<double>(ch(0, 1, 1, 1), 0, i).value - cplx(double(s01))) < 1e-15);
    CHECK(::std::abs(theta_eval<double>(ch(0, 1, 0, 1), 0, i).value - 1.08643481) < 1e-8);
    CHECK(::std::abs(theta_eval<double>(ch(0, 1, 1, 1), 0, i).value - 0.91357913) < 1e-8);
    for (const auto &tau : sample_tau(3, 4)) {
        CHECK(::std::abs(theta_eval<double>(ch(1, 1, 1, 1), 0, tau).value) < 1e-15);
    }
    const auto v = theta_eval<long double>(ch(1, 5, 3, 5), {0.1L, 0.05L}, {0.2L, 0.9L});
    CHECK(v.error < 1e-17L);
    CHECK(v.terms > 3u);
}

TEST_CASE("derivatives")
{
    const cplx i(0, 1);
    CHECK(::std::abs(theta_deriv_eval<double>(ch(0, 1, 0, 1), 0, i).value) < 1e-15);
    const auto d11 = theta_deriv_eval<double>(ch(1, 1, 1, 1), 0, i).value;
    CHECK(::std::abs(d11) > 0.1);
    CHECK(::std::abs(d11 - oracle_theta(1, 1, i, true)) < 1e-13);
    // parity: theta'[-c](z) = -theta'[c](-z)
    const auto taus = sample_tau(5, 3);
    const auto zs = sample_zeta(5, 3);
    for (const auto &c : catalog_chars()) {
        for (const auto &tau : taus) {
            for (const auto &z : zs) {
                const auto a = theta_deriv_eval<double>(-c, z, tau).value;
                const auto b = theta_deriv_eval<double>(c, -z, tau).value;
                CHECK(::std::abs(a + b) < 1e-12 * (1 + ::std::abs(a)));
                // and theta itself is parity-symmetric
                const auto u = theta_eval<double>(-c, z, tau).value;
                const auto w = theta_eval<double>(c, -z, tau).value;
                CHECK(::std::abs(u - w) < 1e-12 * (1 + ::std::abs(u)));
            }
        }
    }
}

TEST_CASE("quasi-periodicity under zeta -> zeta + 1")
{
    const double pi = ::std::numbers::pi;
    for (const auto &c : catalog_chars()) {
        const auto phase = ::std::exp(cplx(0, pi * c.eps.to_double()));
        for (const auto &tau : sample_tau(11, 3)) {
            for (const auto &z : sample_zeta(11, 3)) {
                const auto a = theta_eval<double>(c, z + 1.0, tau).value;
                const auto b = phase * theta_eval<double>(c, z, tau).value;
                CHECK(::std::abs(a - b) < 1e-12 * (1 + ::std::abs(b)));
            }
        }
    }
}

TEST_CASE("exact series agrees with direct summation")
{
    const double pi = ::std::numbers::pi;
    for (const auto &c : catalog_chars()) {
        const auto s = theta_series(c, theta_mode::constant, rational(12));
        for (const auto &tau : sample_tau(0, 5)) {
            const auto x = ::std::exp(cplx(0, pi) * tau);
            cplx v = 0;
            for (const auto &[e, coef] : s.terms()) {
                v += coef.embed_as<double>() * ::std::exp(cplx(0, pi) * tau * e.x.to_double());
            }
            // the omitted tail starts above x^12; two terms per exponent
            const double bound = 2 * ::std::pow(::std::abs(x), 12.0);
            const auto direct = theta_eval<double>(c, 0, tau).value;
            CHECK(::std::abs(v - direct) < 10 * bound + 1e-15);
            CHECK(::std::abs(direct - oracle_theta(c.eps.to_double(), c.epsp.to_double(), tau)) < 1e-14);
        }
    }
}

TEST_CASE("identity residuals")
{
    const cplx i(0, 1);
    CHECK(identity_residual<double>(builtin("jacobi-quartic"), i, ::std::nullopt) < 1e-12);
    CHECK(identity_residual<double>(builtin("quintic-eps15"), {0.2, 1.3}, ::std::nullopt) < 1e-9);
    CHECK(identity_residual<double>(corrupt_identity(builtin("jacobi-quartic"), 0), i, ::std::nullopt) > 1e-3);
    CHECK(identity_residual<double>(builtin("three-theta-j1-k5"), {0.2, 1.3}, cplx(0.1, 0.05)) < 1e-9);
    CHECK_THROWS_AS(identity_residual<double>(builtin("three-theta-j1-k5"), i, ::std::nullopt),
                    ::std::invalid_argument);
    CHECK_THROWS_AS(identity_residual<double>(builtin("jacobi-quartic"), i, cplx(0)), ::std::invalid_argument);
}

TEST_CASE("zero location")
{
    const cplx i(0, 1);
    CHECK(zero_location_check<double>(ch(1, 1, 1, 1), i) < 1e-15);
    CHECK(zero_location_check<double>(ch(0, 1, 0, 1), i) < 1e-10);
    CHECK(zero_location_check<double>(ch(1, 5, 3, 5), {0.3, 0.9}) < 1e-9);
    for (const auto &c : catalog_chars()) {
        for (const auto &tau : sample_tau(2, 3)) {
            CHECK(zero_location_check<double>(c, tau) < 1e-12);
        }
    }
}

TEST_CASE("sampling")
{
    CHECK(sample_tau(0, 1) == sample_tau(0, 1));
    const auto ts = sample_tau(0, 20);
    ::std::set<::std::pair<double, double>> distinct;
    for (const auto &t : ts) {
        CHECK(t.imag() >= 0.8);
        CHECK(t.imag() <= 2.0);
        CHECK(::std::abs(t.real()) <= 0.5);
        distinct.emplace(t.real(), t.imag());
    }
    CHECK(distinct.size() == 20u);
    CHECK(sample_tau(1, 3) != sample_tau(2, 3));
    for (const auto &z : sample_zeta(4, 50)) {
        CHECK(::std::abs(z.real()) <= 0.5);
        CHECK(::std::abs(z.imag()) <= 0.3);
    }
}

TEST_CASE("evaluation errors")
{
    CHECK_THROWS_AS(theta_eval<double>(ch(0, 1, 0, 1), 0, {0.1, -1.0}), ::std::invalid_argument);
    eval_config tight;
    tight.max_terms = 8;
    CHECK_THROWS_AS(theta_eval<double>(ch(0, 1, 0, 1), 0, {0.0, 0.001}, tight), numeric_error);
}

TEST_CASE("residues of the quintic quotients")
{
    const auto taus = sample_tau(17, 3);
    for (const auto &name : quintic_quotient_names()) {
        const auto phi = quintic_quotient(name);
        REQUIRE(phi.denominator.size() == 5u);
        for (const auto &tau : taus) {
            INFO(name << " at tau " << tau);
            const auto poles = phi.poles(tau);
            const double r = default_radius(phi, tau);
            cplx sum = 0;
            for (::std::size_t k = 0; k < poles.size(); ++k) {
                const auto num = numeric_residue<double>(phi, poles[k], tau, r);
                const auto closed = residue_closed_form(phi, k).evaluate<double>(tau);
                CHECK(::std::abs(num - closed) < 1e-8 * ::std::abs(closed));
                sum += num;
            }
            CHECK(::std::abs(sum) < 1e-8);
        }
    }
    CHECK_THROWS_AS(quintic_quotient("eps55"), ::std::invalid_argument);
}

TEST_CASE("closed forms for the eps = 1/5 quotient")
{
    // Res at the pole of theta[1/5;k/5] is
    //   sign theta[1/5;k/5](0)^5 / (theta'[1;1] theta[1;1/5]^2 theta[1;3/5]^2),
    // signs alternating -, +, -, +, - for k = 1, 3, 5, 7, 9.
    const auto phi = quintic_quotient("eps15");
    const cplx tau(0.1, 1.2);
    const auto den = oracle_theta(1, 1, tau, true) * ::std::pow(oracle_theta(1, 0.2, tau), 2)
                     * ::std::pow(oracle_theta(1, 0.6, tau), 2);
    const auto poles = phi.poles(tau);
    for (::std::size_t k = 0; k < 5; ++k) {
        const auto form = residue_closed_form(phi, k);
        CHECK(form.tau_power.is_zero());
        const double sign = k % 2 == 0 ? -1 : 1;
        const auto expect = sign * ::std::pow(oracle_theta(0.2, (2.0 * k + 1) / 5, tau), 5) / den;
        CHECK(::std::abs(form.evaluate<double>(tau) - expect) < 1e-12 * ::std::abs(expect));
    }
    // the pole 2 tau / 5 belongs to theta[1/5;1]
    CHECK(::std::abs(poles[2] - 0.4 * tau) < 1e-15);
    const auto at = numeric_residue<double>(phi, poles[2], tau, default_radius(phi, tau));
    const auto printed = -::std::pow(oracle_theta(0.2, 1, tau), 5) / den;
    CHECK(::std::abs(at - printed) < 1e-8 * ::std::abs(printed));
}

TEST_CASE("residue of a pole-free function vanishes")
{
    theta_quotient one;
    CHECK(::std::abs(numeric_residue<double>(one, cplx(0.1, 0.2), cplx(0, 1), 0.05)) < 1e-15);
    theta_quotient t;
    t.numerator = {{ch(0, 1, 0, 1), 2}};
    CHECK(::std::abs(numeric_residue<double>(t, cplx(0.1, 0.2), cplx(0, 1), 0.05)) < 1e-13);
    CHECK_THROWS_AS(numeric_residue<double>(one, 0, cplx(0, 1), 0.0), ::std::invalid_argument);
    const auto phi = quintic_quotient("eps15");
    const cplx tau(0.1, 1.2);
    CHECK_THROWS_AS(numeric_residue<double>(phi, phi.poles(tau)[0], tau, 0.15), numeric_error);
}
