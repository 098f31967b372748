// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.


#include <complex>
#include <numbers>
#include <vector>

#include <catch_amalgamated.hpp>

#include <qtheta/discover.hpp>

using namespace qtheta;
using cplx = ::std::complex<double>;

namespace
{

const identity &builtin(const ::std::string &id)
{
    const identity *i = find_identity(builtin_catalog(), id);
    REQUIRE(i != nullptr);
    return *i;
}

// theta[eps;eps'](0, tau) by plain summation.
cplx oracle_theta(double eps, double epsp, cplx tau)
{
    const double pi = ::std::numbers::pi;
    cplx s = 0;
    for (int n = -40; n <= 40; ++n) {
        const double k = n + eps / 2;
        s += ::std::exp(cplx(0, pi * k * epsp) + cplx(0, pi) * k * k * tau);
    }
    return s;
}

cplx z5(int k)
{
    return ::std::polar(1.0, 2 * ::std::numbers::pi * k / 5);
}

// zeta-dependent part of each term, and the rest evaluated at tau.
::std::pair<::std::vector<identity_term>, ::std::vector<cplx>> split(const identity &i, cplx tau)
{
    ::std::vector<identity_term> ms;
    ::std::vector<cplx> cs;
    for (const auto &t : i.terms) {
        identity_term m, c;
        m.scalar = cyclotomic(1);
        c.scalar = t.scalar;
        for (const auto &f : t.factors) {
            (f.arg == theta_arg::zeta ? m : c).factors.push_back(f);
        }
        ms.push_back(m);
        cs.push_back(term_value<double>(c, 0, tau));
    }
    return {ms, cs};
}

double direction_error(const ::std::vector<cplx> &got, ::std::vector<cplx> want)
{
    const auto w0 = want.front();
    double e = 0;
    for (::std::size_t k = 0; k < want.size(); ++k) {
        e = ::std::max(e, ::std::abs(got[k] - want[k] / w0));
    }
    return e;
}

characteristic ch(long a, long b, long c, long d)
{
    return {rational(a, b), rational(c, d)};
}

} // namespace

TEST_CASE("the first three-theta family: rank 3 and the expected coefficients")
{
    const cplx tau(0.3, 1.1);
    const auto mono = [](characteristic sq, characteristic one) {
        identity_term t;
        t.scalar = cyclotomic(1);
        t.factors = {{sq, 2, theta_arg::zeta}, {one, 1, theta_arg::zeta}};
        return t;
    };
    const ::std::vector<identity_term> ms = {mono(ch(1, 5, 1, 5), ch(1, 5, 3, 5)), mono(ch(1, 5, 3, 5), ch(1, 5, 9, 5)),
                                             mono(ch(1, 5, 9, 5), ch(1, 5, 7, 5)), mono(ch(1, 5, 7, 5), ch(1, 5, 1, 5))};
    const auto r = discover_relations(ms, tau, 16);
    CHECK(r.nullity == 1u);
    REQUIRE(r.coefficients.size() == 4u);
    const auto a = oracle_theta(1, 0.6, tau), b = oracle_theta(1, 0.2, tau);
    const ::std::vector<cplx> want = {a, z5(2) * b, -z5(4) * a, -z5(2) * b};
    CHECK(direction_error(r.coefficients, want) < 1e-8);
    CHECK(r.singular_values.size() == 4u);
    CHECK(r.singular_values[3] < 1e-8 * r.singular_values[0]);
    CHECK(r.singular_values[2] > 1e-8 * r.singular_values[0]);
}

TEST_CASE("rank law for every three-theta entry of both families")
{
    for (int j : {1, 3}) {
        for (int k : {1, 3, 5, 7, 9}) {
            const auto id = "three-theta-j" + ::std::to_string(j) + "-k" + ::std::to_string(k);
            INFO(id);
            for (const cplx tau : {cplx(0.3, 1.1), cplx(-0.2, 0.9)}) {
                const auto [ms, cs] = split(builtin(id), tau);
                REQUIRE(ms.size() == 4u);
                const auto r = discover_relations(ms, tau, 16);
                CHECK(r.nullity == 1u);
                CHECK(direction_error(r.coefficients, cs) < 1e-8);
            }
        }
    }
}

TEST_CASE("degenerate monomial lists")
{
    const cplx tau(0.3, 1.1);
    identity_term f;
    f.scalar = cyclotomic(1);
    f.factors = {{ch(1, 5, 1, 5), 2, theta_arg::zeta}, {ch(1, 5, 3, 5), 1, theta_arg::zeta}};
    const auto one = discover_relations({f}, tau, 6);
    CHECK(one.nullity == 0u);
    CHECK(one.coefficients.empty());
    const auto two = discover_relations({f, f}, tau, 6);
    CHECK(two.nullity == 1u);
    REQUIRE(two.coefficients.size() == 2u);
    CHECK(::std::abs(two.coefficients[0] - 1.0) < 1e-12);
    CHECK(::std::abs(two.coefficients[1] + 1.0) < 1e-12);
    CHECK_THROWS_AS(discover_relations({f, f}, tau, 1), ::std::invalid_argument);
    CHECK_THROWS_AS(discover_relations({f}, cplx(0, -1), 4), ::std::invalid_argument);
}

TEST_CASE("grid")
{
    const auto g = discovery_grid(4);
    REQUIRE(g.size() == 4u);
    CHECK(g[0] == cplx(0.37 / 5, 0.21));
    CHECK(g[3] == cplx(3.37 / 5, 0.21));
}
