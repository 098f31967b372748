// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.


#include <algorithm>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include <qtheta/verify.hpp>

using namespace qtheta;

namespace
{

const identity &builtin(const char *id)
{
    const identity *i = find_identity(builtin_catalog(), id);
    REQUIRE(i != nullptr);
    return *i;
}

::std::vector<identity> holds()
{
    ::std::vector<identity> r;
    for (const auto &i : builtin_catalog()) {
        if (i.expected == expected_status::holds) {
            r.push_back(i);
        }
    }
    return r;
}

} // namespace

TEST_CASE("exact verification examples")
{
    CHECK(verify_exact(builtin("jacobi-quartic"), rational(10)).status == verify_status::pass);
    CHECK(verify_exact(builtin("quintic-eps15"), rational(8)).status == verify_status::pass);

    // Negating the T00^4 term leaves -T00^4 - T10^4 - T01^4; at x^0 only the
    // two constant terms 1 contribute.
    const auto bad = verify_exact(corrupt_identity(builtin("jacobi-quartic"), 0), rational(10));
    REQUIRE(bad.status == verify_status::fail);
    REQUIRE(!bad.residuals.empty());
    CHECK(bad.residuals.front().first == exponent_pair{rational(0), rational(0)});
    CHECK(bad.residuals.front().second == cyclotomic(-2));
    CHECK(bad.residuals.size() <= max_residuals);
}

TEST_CASE("golden leading residual of a corrupted quintic")
{
    // Term 3 is -T[1/5;7/5]^5; flipping it leaves 2 T[1/5;7/5]^5 + O(higher).
    // T[1/5;7/5] starts with exp(pi i (1/10)(7/5)) x^(1/100), so the fifth
    // power starts with exp(2 pi i 35/100) x^(1/20).
    const auto r = verify_exact(corrupt_identity(builtin("quintic-eps15"), 3), rational(8));
    REQUIRE(r.status == verify_status::fail);
    CHECK(r.residuals.front().first.x == rational(1, 20));
    CHECK(r.residuals.front().second == cyclotomic::root(35, 100).scaled(rational(2)));
}

TEST_CASE("bad cutoffs")
{
    CHECK_THROWS_AS(verify_exact(builtin("jacobi-quartic"), rational(0)), ::std::invalid_argument);
    CHECK_THROWS_AS(verify_exact(builtin("jacobi-quartic"), rational(-1)), ::std::invalid_argument);
    // theta[1;0] starts at x^(1/4)
    CHECK_THROWS_AS(verify_exact(builtin("jacobi-quartic"), rational(1, 8)), precision_error);
}

TEST_CASE("all holds entries pass at cutoff 8; suspect ones are reported")
{
    const auto rs = verify_all(builtin_catalog(), rational(8));
    REQUIRE(rs.size() == builtin_catalog().size());
    CHECK(::std::is_sorted(rs.begin(), rs.end(), [](const auto &a, const auto &b) { return a.id < b.id; }));
    for (const auto &r : rs) {
        INFO(r.id);
        if (r.expected == expected_status::holds) {
            CHECK(r.status == verify_status::pass);
            CHECK(r.residuals.empty());
        } else {
            CHECK(r.status == verify_status::fail);
        }
    }
    CHECK(batch_passed(rs));
}

TEST_CASE("suspect adjudication for the repeated-factor quintic")
{
    const auto printed = verify_exact(builtin("quintic-epsp35-printed"), rational(8));
    const auto fixed = verify_exact(builtin("quintic-epsp35"), rational(8));
    CHECK(printed.status == verify_status::fail);
    CHECK(fixed.status == verify_status::pass);
    // printed - corrected = z5^2 (T[1/5;7/5]^5 - T[3/5;7/5]^5). The first
    // part leads with z5^2 exp(2 pi i 35/100) x^(1/20); the second starts at x^(9/20).
    REQUIRE(!printed.residuals.empty());
    CHECK(printed.residuals.front().first.x == rational(1, 20));
    CHECK(printed.residuals.front().second == cyclotomic::root(75, 100));
}

TEST_CASE("monotonicity: passing at a cutoff keeps passing above it")
{
    for (const char *id : {"jacobi-quartic", "fk-cubic-2", "quintic-eps35", "three-theta-j3-k9", "rational-j1-k3-a"}) {
        INFO(id);
        for (const auto &c : {rational(3), rational(6), rational(9), rational(12)}) {
            CHECK(verify_exact(builtin(id), c).passed());
        }
    }
    // and a failing identity keeps its lowest residual as the cutoff grows
    const auto bad = corrupt_identity(builtin("fk-cubic-1"), 1);
    const auto lo = verify_exact(bad, rational(4)), hi = verify_exact(bad, rational(9));
    REQUIRE(!lo.residuals.empty());
    CHECK(lo.residuals.front() == hi.residuals.front());
}

TEST_CASE("mutation kill at cutoff 8")
{
    for (const auto &i : holds()) {
        for (::std::uint64_t seed = 0; seed < i.terms.size(); ++seed) {
            INFO(i.id << " seed " << seed);
            CHECK(verify_exact(corrupt_identity(i, seed), rational(8)).status == verify_status::fail);
        }
    }
}

TEST_CASE("batch behaviour")
{
    CHECK(verify_all({}, rational(8)).empty());
    CHECK(batch_passed({}));

    auto cat = holds();
    cat.resize(6);
    cat[2] = corrupt_identity(cat[2], 0);
    for (unsigned jobs : {1u, 4u}) {
        const auto rs = verify_all(cat, rational(8), jobs);
        CHECK(::std::count_if(rs.begin(), rs.end(), [](const auto &r) { return r.status == verify_status::fail; })
              == 1);
        CHECK_FALSE(batch_passed(rs));
    }

    // a too-small cutoff becomes an error report, not an exception
    const auto rs = verify_all({builtin("jacobi-quartic")}, rational(1, 8));
    REQUIRE(rs.size() == 1u);
    CHECK(rs[0].status == verify_status::error);
    CHECK(!rs[0].message.empty());
}

TEST_CASE("numeric verification")
{
    const auto plan = make_numeric_plan(0, 20, 1e-9);
    CHECK(plan.taus.size() == 20u);
    for (const auto &i : holds()) {
        INFO(i.id);
        const auto r = verify_numeric(i, plan);
        CHECK(r.status == verify_status::pass);
        REQUIRE(r.max_residual);
        CHECK(*r.max_residual < 1e-9);
        CHECK(r.points == (i.kind == identity_kind::function ? 100u : 20u));
        for (::std::uint64_t seed = 0; seed < i.terms.size(); ++seed) {
            const auto m = verify_numeric(corrupt_identity(i, seed), plan);
            CHECK(m.status == verify_status::fail);
            CHECK(*m.min_residual > 1e-3);
        }
    }
}

TEST_CASE("report JSON")
{
    const auto r = verify_exact(corrupt_identity(builtin("jacobi-quartic"), 0), rational(10));
    const auto j = report_to_json(r);
    CHECK(j["id"] == "jacobi-quartic");
    CHECK(j["status"] == "fail");
    CHECK(j["cutoff"] == "10/1");
    CHECK(j["residuals"][0]["coeff"] == "-2");
    CHECK(j["elapsed_ms"].is_null());
    CHECK(report_to_json(r, true)["elapsed_ms"].is_number());
    CHECK(j.dump() == report_to_json(r).dump());
}
