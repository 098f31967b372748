// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.


#include <numeric>
#include <random>

#include <catch_amalgamated.hpp>

#include <qtheta/divisor.hpp>

#include "oracles.hpp"

using namespace qtheta;

TEST_CASE("sigma and delta examples")
{
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma(2) == 3);
    CHECK(delta(1) == 1);
    CHECK(delta(2) == 0);
    CHECK(delta(4) == 1);
    CHECK(delta(5) == 0);
    CHECK(delta(25) == 1);
    CHECK_THROWS_AS(sigma(0), ::std::domain_error);
    CHECK_THROWS_AS(delta(-3), ::std::domain_error);
}

TEST_CASE("against brute force")
{
    for (long n = 1; n <= 2000; ++n) {
        REQUIRE(sigma(n) == oracle::sigma(n));
        REQUIRE(delta(n) == oracle::delta(n));
    }
}

TEST_CASE("sigma is multiplicative on coprime pairs")
{
    ::std::mt19937_64 rng(5);
    ::std::uniform_int_distribution<long> d(1, 3000);
    for (int k = 0; k < 300; ++k) {
        const long a = d(rng), b = d(rng);
        if (::std::gcd(a, b) == 1) {
            CHECK(sigma(a * b) == sigma(a) * sigma(b));
        }
    }
}

TEST_CASE("convolution identity")
{
    // n = 0: sigma(2) = 3 = 3 delta(1)^2; n = 1: sigma(5) = 6 = 3 (delta(1) delta(4) + delta(4) delta(1)).
    CHECK(sigma(2) == 3 * delta(1) * delta(1));
    CHECK(sigma(5) == 3 * (delta(1) * delta(4) + delta(4) * delta(1)));
    const auto r = verify_sigma_convolution(500);
    CHECK(r.passed());
    CHECK(r.n_max == 500);
    CHECK(verify_sigma_convolution(0).passed());
    CHECK_THROWS_AS(verify_sigma_convolution(-1), ::std::domain_error);
}
