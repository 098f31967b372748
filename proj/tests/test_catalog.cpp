// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.


#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <catch_amalgamated.hpp>

#include <qtheta/catalog.hpp>

using namespace qtheta;

namespace
{

const identity &builtin(const char *id)
{
    const identity *i = find_identity(builtin_catalog(), id);
    REQUIRE(i != nullptr);
    return *i;
}

characteristic ch(long a, long b, long c, long d)
{
    return {rational(a, b), rational(c, d)};
}

theta_factor zero_factor(characteristic c, unsigned p)
{
    return {::std::move(c), p, theta_arg::zero};
}

const char *quartic_json = R"({
  "id": "q",
  "kind": "constant",
  "ref": "",
  "expected": "holds",
  "terms": [
    {"scalar": "1", "factors": [{"eps": "0", "epsp": "0", "pow": 4, "arg": "zero"}]},
    {"scalar": "-1", "factors": [{"eps": "1", "epsp": "0", "pow": 4, "arg": "zero"}]},
    {"scalar": "-1", "factors": [{"eps": "0", "epsp": "1", "pow": 4, "arg": "zero"}]}
  ]
})";

} // namespace

TEST_CASE("corpus size and group counts")
{
    const auto &cat = builtin_catalog();
    CHECK(cat.size() == corpus_counts::total);
    CHECK(corpus_counts::total
          == corpus_counts::classical + corpus_counts::quintic + corpus_counts::three_theta + corpus_counts::ratio
                 + corpus_counts::cubic_expr + corpus_counts::two_theta + corpus_counts::rational_expr
                 + corpus_counts::algebraic + corpus_counts::cross);
    ::std::map<::std::string, ::std::size_t> groups;
    for (const auto &e : builtin_entries()) {
        ++groups[e.group];
    }
    CHECK(groups.size() == 9u);
    CHECK(groups["quintic"] == corpus_counts::quintic);
    CHECK(groups["rational"] == corpus_counts::rational_expr);
    ::std::set<::std::string> ids;
    for (const auto &i : cat) {
        ids.insert(i.id);
    }
    CHECK(ids.size() == cat.size());
    const auto suspects = ::std::count_if(cat.begin(), cat.end(),
                                          [](const identity &i) { return i.expected == expected_status::suspect; });
    CHECK(suspects == 3);
}

TEST_CASE("builtin examples")
{
    const auto &q = builtin("jacobi-quartic");
    CHECK(q.kind == identity_kind::constant);
    REQUIRE(q.terms.size() == 3u);
    CHECK(q.degree() == 4u);
    // T00^4 - T10^4 - T01^4 as a multiset of (char, scalar).
    ::std::map<characteristic, cyclotomic> seen;
    for (const auto &t : q.terms) {
        REQUIRE(t.factors.size() == 1u);
        CHECK(t.factors[0].power == 4u);
        seen.emplace(t.factors[0].ch, t.scalar);
    }
    CHECK(seen.at(ch(0, 1, 0, 1)) == cyclotomic(1));
    CHECK(seen.at(ch(1, 1, 0, 1)) == cyclotomic(-1));
    CHECK(seen.at(ch(0, 1, 1, 1)) == cyclotomic(-1));

    const auto &p = builtin("quintic-eps15");
    REQUIRE(p.terms.size() == 5u);
    CHECK(p.degree() == 5u);
    for (::std::size_t k = 0; k < 5; ++k) {
        CHECK(p.terms[k].scalar == cyclotomic(k % 2 == 0 ? 1 : -1));
        CHECK(p.terms[k].factors[0].ch == ch(1, 5, 2 * static_cast<long>(k) + 1, 5));
    }

    const auto &c = builtin("fk-cubic-1");
    REQUIRE(c.terms.size() == 3u);
    CHECK(c.terms[0].factors[0] == zero_factor(ch(1, 3, 1, 3), 3));
    CHECK(c.terms[1].factors[0] == zero_factor(ch(1, 3, 5, 3), 3));
    CHECK(c.terms[2].factors[0] == zero_factor(ch(1, 3, 1, 1), 3));
    CHECK(c.terms[2].scalar == cyclotomic(-1));
}

TEST_CASE("every builtin entry is homogeneous, reduced and hygienic")
{
    for (const auto &i : builtin_catalog()) {
        INFO(i.id);
        REQUIRE(!i.terms.empty());
        const auto d = i.terms.front().degree();
        bool has_zeta = false;
        for (const auto &t : i.terms) {
            CHECK(t.degree() == d);
            CHECK(!t.scalar.is_zero());
            for (const auto &f : t.factors) {
                CHECK(f.power >= 1u);
                CHECK(reduce_char(f.ch).first == f.ch);
                CHECK(hygienic_characteristic(f.ch));
                has_zeta = has_zeta || f.arg == theta_arg::zeta;
            }
        }
        CHECK(has_zeta == (i.kind == identity_kind::function));
    }
    CHECK_FALSE(hygienic_characteristic(ch(1, 5, 2, 5)));
    CHECK_FALSE(hygienic_characteristic(ch(1, 7, 1, 1)));
    CHECK(hygienic_characteristic(ch(11, 5, 13, 5)));
}

TEST_CASE("serialize then parse round-trips every builtin entry")
{
    for (const auto &i : builtin_catalog()) {
        INFO(i.id);
        const auto back = parse_identity(serialize_identity(i));
        CHECK(back.id == i.id);
        CHECK(back.kind == i.kind);
        CHECK(back.expected == i.expected);
        CHECK(back.ref == i.ref);
        CHECK(back.terms == i.terms);
    }
    const auto all = parse_catalog(serialize_catalog(builtin_catalog()));
    CHECK(all.size() == builtin_catalog().size());
    CHECK(serialize_catalog(all) == serialize_catalog(builtin_catalog()));
}

TEST_CASE("JSON fragments")
{
    const auto q = parse_identity(quartic_json);
    CHECK(q.terms.size() == 3u);
    CHECK(q.degree() == 4u);
    CHECK(q.terms == builtin("jacobi-quartic").terms);

    ::std::string z = quartic_json;
    z.replace(z.find("\"-1\""), 4, "\"zeta5^2\"");
    const auto zq = parse_identity(z);
    bool found = false;
    for (const auto &t : zq.terms) {
        found = found || t.scalar == cyclotomic::root(2, 5);
    }
    CHECK(found);
}

TEST_CASE("JSON errors carry a location")
{
    SECTION("homogeneity")
    {
        ::std::string s = quartic_json;
        s.replace(s.find("\"pow\": 4, \"arg\": \"zero\"}]},\n    {\"scalar\": \"-1\""), 8, "\"pow\": 3");
        CHECK_THROWS_WITH(parse_identity(s), Catch::Matchers::ContainsSubstring("homogeneous")
                                                 || Catch::Matchers::ContainsSubstring("degree"));
    }
    SECTION("syntax error line and column")
    {
        const ::std::string s = "{\n  \"id\": \"q\",\n  \"kind\" \"constant\"\n}";
        try {
            parse_identity(s);
            FAIL("no error");
        } catch (const catalog_error &e) {
            CHECK(e.line() == 3u);
            CHECK(e.column() > 0u);
        }
    }
    SECTION("unknown field")
    {
        ::std::string s = quartic_json;
        s.replace(s.find("\"kind\""), 6, "\"colour\": 1, \"kind\"");
        try {
            parse_identity(s);
            FAIL("no error");
        } catch (const catalog_error &e) {
            CHECK_THAT(::std::string(e.what()), Catch::Matchers::ContainsSubstring("colour"));
        }
    }
    SECTION("bad scalar points at the term")
    {
        ::std::string s = quartic_json;
        s.replace(s.find("\"-1\""), 4, "\"1/0\"");
        try {
            parse_identity(s);
            FAIL("no error");
        } catch (const catalog_error &e) {
            CHECK_THAT(e.where(), Catch::Matchers::ContainsSubstring("terms/1"));
        }
    }
    SECTION("duplicate ids")
    {
        const ::std::string one = serialize_identity(builtin("jacobi-quartic"));
        CHECK_THROWS_AS(parse_catalog("[" + one + "," + one + "]"), catalog_error);
    }
    SECTION("constant kind with a zeta factor")
    {
        ::std::string s = quartic_json;
        s.replace(s.find("\"zero\""), 6, "\"zeta\"");
        CHECK_THROWS_AS(parse_identity(s), catalog_error);
    }
}

TEST_CASE("notation parser")
{
    const auto a = identity_from_notation("a", "T[0;0]^4 = T[1;0]^4 + T[0;1]^4");
    CHECK(a.terms == builtin("jacobi-quartic").terms);
    // A/B = C/D cross-multiplies to A D - C B.
    const auto r = identity_from_notation("r", "T[0;0]^2 / T[0;1] = T[1;0]^2 / T[1;1]");
    CHECK(r.terms.size() == 2u);
    CHECK(r.degree() == 3u);
    // characteristics outside [0, 2) are reduced with their phase folded in
    const auto s = identity_from_notation("s", "T[1/5;11/5] - e(1/10) T[1/5;1/5]");
    CHECK(s.terms.empty() == false);
    CHECK(identity_from_notation("f", "T[1/5;1/5](z) T[1;1/5] - T[1/5;3/5](z) T[1;1/5]").kind
          == identity_kind::function);
    CHECK_THROWS_AS(identity_from_notation("c", "T[1/5;1/5](z) T[1;1/5] - T[1/5;1/5](z) T[1;1/5]"), catalog_error);
    CHECK_THROWS_AS(identity_from_notation("h", "T[0;0]^4 - T[0;1]^2"), catalog_error);
    CHECK_THROWS_AS(identity_from_notation("p", "T[0;0"), catalog_error);
}

TEST_CASE("corrupt_identity is deterministic and flips one sign")
{
    const auto &q = builtin("jacobi-quartic");
    for (::std::uint64_t seed : {0u, 1u, 2u, 7u, 1000u}) {
        const auto a = corrupt_identity(q, seed), b = corrupt_identity(q, seed);
        CHECK(a.terms == b.terms);
        ::std::size_t changed = 0;
        for (::std::size_t k = 0; k < q.terms.size(); ++k) {
            if (!(a.terms[k] == q.terms[k])) {
                ++changed;
                CHECK(a.terms[k].scalar == -q.terms[k].scalar);
                CHECK(k == seed % q.terms.size());
            }
        }
        CHECK(changed == 1u);
    }
    CHECK(corrupt_identity(q, 0).terms[0].scalar == -q.terms[0].scalar);
    identity empty;
    CHECK_THROWS(corrupt_identity(empty, 0));
}
