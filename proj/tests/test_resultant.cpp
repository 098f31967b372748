// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.


#include <complex>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include <qtheta/resultant.hpp>

using namespace qtheta;
using cplx = ::std::complex<double>;

namespace
{

using cpoly = poly<cyclotomic>;

cpoly lead(::std::vector<long> cs)
{
    ::std::vector<cyclotomic> v;
    for (long c : cs) {
        v.emplace_back(c);
    }
    return cpoly::from_leading(v);
}

// A random element a_0 + a_1 z5 + a_2 z5^2 + a_3 z5^3 with small rational a_i.
cyclotomic random_element(::std::mt19937_64 &rng)
{
    ::std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    ::std::vector<::std::pair<::std::int64_t, rational>> ts;
    for (int k = 0; k < 4; ++k) {
        ts.emplace_back(k, rational(num(rng), den(rng)));
    }
    return cyclotomic::from_terms(5, ts);
}

// For monic f, g: Res(f, g) = prod (r_i - s_j).
cyclotomic root_product(const ::std::vector<cyclotomic> &r, const ::std::vector<cyclotomic> &s)
{
    cyclotomic p(1);
    for (const auto &a : r) {
        for (const auto &b : s) {
            p *= a - b;
        }
    }
    return p;
}

} // namespace

TEST_CASE("Sylvester matrix shapes")
{
    const auto s = sylvester_matrix(lead({1, 1}), lead({1, -1}));
    REQUIRE(s.size() == 2u);
    CHECK(s[0] == ::std::vector<cyclotomic>{1, 1});
    CHECK(s[1] == ::std::vector<cyclotomic>{1, -1});
    CHECK(sylvester_matrix(lead({1, 0, 0, 1}), lead({1, 2, 3})).size() == 5u);
    const auto q = sylvester_matrix(lead({1, 2, 3}), lead({1, 5, 7}));
    CHECK(q[0] == ::std::vector<cyclotomic>{1, 2, 3, 0});
    CHECK(q[1] == ::std::vector<cyclotomic>{0, 1, 2, 3});
    CHECK(q[2] == ::std::vector<cyclotomic>{1, 5, 7, 0});
    CHECK(q[3] == ::std::vector<cyclotomic>{0, 1, 5, 7});
    CHECK_THROWS_AS(sylvester_matrix(lead({3}), lead({1, 1})), ::std::invalid_argument);
}

TEST_CASE("resultant examples")
{
    CHECK(resultant(lead({1, 0, -1}), lead({1, -1, 0})).is_zero());
    CHECK(resultant(lead({1, 0, 1}), lead({1, 0, -1})) == cyclotomic(4));
    CHECK(resultant(lead({2, 3, 1}), lead({2, 3, 1})).is_zero());
    CHECK(resultant_2x2(lead({1, 0, -1}), lead({1, -1, 0})).is_zero());
    CHECK(resultant_2x2(lead({1, 0, 1}), lead({1, 0, -1})) == cyclotomic(4));
    CHECK_THROWS_AS(resultant_2x2(lead({1, 0, 1}), lead({1, 1})), ::std::invalid_argument);
    // leading-coefficient scaling: Res(a f, g) = a^deg g Res(f, g)
    CHECK(resultant(lead({3, 0, 3}), lead({1, 0, -1})) == cyclotomic(36));
}

TEST_CASE("planted common roots give zero, disjoint roots the root product")
{
    ::std::mt19937_64 rng(2024);
    ::std::uniform_int_distribution<int> deg(1, 2);
    for (int n = 0; n < 200; ++n) {
        const auto a = random_element(rng);
        ::std::vector<cyclotomic> r{a}, s{a};
        for (int k = deg(rng); k > 0; --k) {
            r.push_back(random_element(rng));
        }
        for (int k = deg(rng); k > 0; --k) {
            s.push_back(random_element(rng));
        }
        CHECK(resultant(cpoly::from_roots(r), cpoly::from_roots(s)).is_zero());
    }
    for (int n = 0; n < 200; ++n) {
        ::std::vector<cyclotomic> r, s;
        for (int k = deg(rng) + 1; k > 0; --k) {
            r.emplace_back(rational(static_cast<long>(k) + 10 * n));
        }
        for (int k = deg(rng); k > 0; --k) {
            s.push_back(random_element(rng).scaled(rational(1, 7)) + cyclotomic(rational(-1, 2)));
        }
        // rational roots r are integers; s has fractional rational part, so they never meet
        const auto res = resultant(cpoly::from_roots(r), cpoly::from_roots(s));
        CHECK(!res.is_zero());
        CHECK(res == root_product(r, s));
    }
}

TEST_CASE("closed 2x2 formula equals the Sylvester determinant")
{
    ::std::mt19937_64 rng(7);
    for (int n = 0; n < 100; ++n) {
        cpoly f(::std::vector<cyclotomic>{random_element(rng), random_element(rng), random_element(rng) + cyclotomic(5)});
        cpoly g(::std::vector<cyclotomic>{random_element(rng), random_element(rng), random_element(rng) + cyclotomic(5)});
        CHECK(resultant(f, g) == resultant_2x2(f, g));
    }
}

TEST_CASE("multiplicativity")
{
    ::std::mt19937_64 rng(11);
    for (int n = 0; n < 30; ++n) {
        const auto f = cpoly::from_roots({random_element(rng), random_element(rng)});
        const auto g = cpoly::from_roots({random_element(rng)});
        const auto h = cpoly::from_roots({random_element(rng), random_element(rng)});
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("numeric determinant")
{
    const poly<cplx> f(::std::vector<cplx>{1.0, 0.0, 1.0}), g(::std::vector<cplx>{-1.0, 0.0, 1.0});
    CHECK(::std::abs(resultant(f, g) - 4.0) < 1e-14);
    CHECK(::std::abs(resultant_2x2(f, g) - 4.0) < 1e-14);
}

TEST_CASE("theta quadratics share their root")
{
    const ::std::vector<cplx> taus = {{0.25, 1.0}, {-0.1, 0.9}, {0.4, 1.6}};
    for (const auto &tau : taus) {
        INFO(tau);
        const auto [f, g] = theta_quadratics(tau);
        const double scale = coefficient_scale(f, g);
        CHECK(::std::abs(resultant_2x2(f, g)) < 1e-8 * ::std::pow(scale, 4));
        CHECK(::std::abs(resultant(f, g)) < 1e-8 * ::std::pow(scale, 4));
        const auto x = theta_quadratics_root(tau);
        CHECK(::std::abs(f(x)) < 1e-8 * scale);
        CHECK(::std::abs(g(x)) < 1e-8 * scale);
        auto c = f.coefficients();
        c[1] += 1e-3;
        const poly<cplx> bent(c);
        CHECK(::std::abs(resultant_2x2(bent, g)) > 1e-6 * ::std::pow(scale, 4));
    }
}
