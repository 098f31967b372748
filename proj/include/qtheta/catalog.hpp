// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_CATALOG_HPP
#define QTHETA_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include <qtheta/cyclotomic.hpp>
#include <qtheta/rational.hpp>
#include <qtheta/theta.hpp>

namespace qtheta
{

// Malformed catalog input. line/column are 1-based and 0 when unknown;
// where() names the offending JSON location.
class catalog_error : public ::std::runtime_error
{
    ::std::size_t line_ = 0, column_ = 0;
    ::std::string where_;

public:
    explicit catalog_error(const ::std::string &msg, ::std::string where = {}, ::std::size_t line = 0,
                           ::std::size_t column = 0)
        : ::std::runtime_error(compose(msg, where, line, column)), line_(line), column_(column),
          where_(::std::move(where))
    {
    }
    ::std::size_t line() const noexcept
    {
        return line_;
    }
    ::std::size_t column() const noexcept
    {
        return column_;
    }
    const ::std::string &where() const noexcept
    {
        return where_;
    }

private:
    static ::std::string compose(const ::std::string &msg, const ::std::string &where, ::std::size_t line,
                                 ::std::size_t column)
    {
        ::std::string s = "catalog: ";
        if (line != 0) {
            s += "line " + ::std::to_string(line) + ", column " + ::std::to_string(column) + ": ";
        }
        if (!where.empty()) {
            s += where + ": ";
        }
        return s + msg;
    }
};

enum class theta_arg { zero, zeta };
enum class identity_kind { constant, function };
enum class expected_status { holds, suspect };

struct theta_factor {
    characteristic ch;
    unsigned power = 1;
    theta_arg arg = theta_arg::zero;

    friend bool operator==(const theta_factor &, const theta_factor &) = default;
};

// Factors are kept sorted by (arg, characteristic) with distinct keys.
struct identity_term {
    cyclotomic scalar;
    ::std::vector<theta_factor> factors;

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto &f : factors) {
            d += f.power;
        }
        return d;
    }
    bool same_monomial(const identity_term &o) const
    {
        return factors == o.factors;
    }
    friend bool operator==(const identity_term &a, const identity_term &b)
    {
        return a.factors == b.factors && a.scalar == b.scalar;
    }
};

// Asserts sum of terms == 0 identically in tau (and zeta for function kind).
struct identity {
    ::std::string id;
    identity_kind kind = identity_kind::constant;
    ::std::vector<identity_term> terms;
    ::std::string ref;
    expected_status expected = expected_status::holds;

    unsigned degree() const
    {
        return terms.empty() ? 0u : terms.front().degree();
    }
    friend bool operator==(const identity &, const identity &) = default;
};

inline ::std::string to_string(identity_kind k)
{
    return k == identity_kind::constant ? "constant" : "function";
}
inline ::std::string to_string(expected_status s)
{
    return s == expected_status::holds ? "holds" : "suspect";
}

namespace detail
{

inline bool factor_less(const theta_factor &a, const theta_factor &b)
{
    if (a.arg != b.arg) {
        return a.arg < b.arg;
    }
    return a.ch < b.ch;
}

// Sort, merge equal keys, drop nothing (powers are positive).
inline void normalize_factors(::std::vector<theta_factor> &fs)
{
    ::std::sort(fs.begin(), fs.end(), factor_less);
    ::std::vector<theta_factor> out;
    for (auto &f : fs) {
        if (!out.empty() && out.back().arg == f.arg && out.back().ch == f.ch) {
            out.back().power += f.power;
        } else {
            out.push_back(::std::move(f));
        }
    }
    fs = ::std::move(out);
}

// Reduce each characteristic into [0,2)^2, folding the even-shift factors
// into the scalar.
inline void reduce_term(identity_term &t)
{
    for (auto &f : t.factors) {
        auto [c0, mu] = reduce_char(f.ch);
        if (!(c0 == f.ch)) {
            for (unsigned p = 0; p < f.power; ++p) {
                t.scalar = t.scalar * mu;
            }
            f.ch = ::std::move(c0);
        }
    }
    normalize_factors(t.factors);
}

// A polynomial in theta factors: monomials in first-occurrence order.
using theta_poly = ::std::vector<identity_term>;

inline void poly_add_term(theta_poly &p, identity_term t)
{
    for (auto it = p.begin(); it != p.end(); ++it) {
        if (it->same_monomial(t)) {
            it->scalar = (it->scalar + t.scalar).compact();
            if (it->scalar.is_zero()) {
                p.erase(it);
            }
            return;
        }
    }
    if (!t.scalar.is_zero()) {
        p.push_back(::std::move(t));
    }
}

inline theta_poly poly_add(theta_poly a, const theta_poly &b, bool negate = false)
{
    for (const auto &t : b) {
        auto u = t;
        if (negate) {
            u.scalar = -u.scalar;
        }
        poly_add_term(a, ::std::move(u));
    }
    return a;
}

inline theta_poly poly_mul(const theta_poly &a, const theta_poly &b)
{
    theta_poly r;
    for (const auto &s : a) {
        for (const auto &t : b) {
            identity_term u;
            u.scalar = (s.scalar * t.scalar).compact();
            u.factors = s.factors;
            u.factors.insert(u.factors.end(), t.factors.begin(), t.factors.end());
            normalize_factors(u.factors);
            poly_add_term(r, ::std::move(u));
        }
    }
    return r;
}

inline theta_poly poly_scalar(cyclotomic c)
{
    return {identity_term{::std::move(c), {}}};
}

// Compact identity notation used for the builtin corpus:
//   identity := side [ '=' side ]          side := sum [ '/' product ]
//   sum      := [+|-] product { (+|-) product }
//   product  := factor { factor }          factor := atom [ '^' int ]
//   atom     := int | 'z5' | 'e(' p/q ')' | 'T[' p/q ';' p/q ']' [ '(z)' ]
//             | '{' sum '}' | '(' sum ')'
// z5 = exp(2 pi i/5), e(r) = exp(pi i r); T[a;b] is a theta constant and
// T[a;b](z) the theta function. A/B = C/D is stored as A D - C B.
class notation_parser
{
    ::std::string_view s_;
    ::std::size_t i_ = 0;

    [[noreturn]] void fail(const ::std::string &msg) const
    {
        throw catalog_error(msg + " at offset " + ::std::to_string(i_) + " in '" + ::std::string(s_) + "'");
    }
    void skip()
    {
        while (i_ < s_.size() && ::std::isspace(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
    }
    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c)
    {
        if (peek(c)) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!eat(c)) {
            fail(::std::string("expected '") + c + "'");
        }
    }
    bool eat_word(::std::string_view w)
    {
        skip();
        if (s_.substr(i_, w.size()) == w) {
            i_ += w.size();
            return true;
        }
        return false;
    }
    ::std::int64_t integer()
    {
        skip();
        const auto start = i_;
        while (i_ < s_.size() && ::std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
        if (start == i_) {
            fail("expected an integer");
        }
        return ::std::stoll(::std::string(s_.substr(start, i_ - start)));
    }
    rational fraction_until(char stop)
    {
        skip();
        const auto start = i_;
        while (i_ < s_.size() && s_[i_] != stop) {
            ++i_;
        }
        try {
            return rational::parse(s_.substr(start, i_ - start));
        } catch (const ::std::exception &e) {
            fail(e.what());
        }
    }
    bool starts_atom()
    {
        skip();
        if (i_ >= s_.size()) {
            return false;
        }
        const char c = s_[i_];
        return ::std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'e' || c == 'T' || c == '{'
               || c == '(';
    }

    theta_poly atom()
    {
        skip();
        if (eat('{')) {
            auto p = sum();
            expect('}');
            return p;
        }
        if (eat('(')) {
            auto p = sum();
            expect(')');
            return p;
        }
        if (eat_word("z5")) {
            return poly_scalar(cyclotomic::root(1, 5));
        }
        if (eat_word("e(")) {
            const rational r = fraction_until(')');
            expect(')');
            return poly_scalar(cyclotomic::unit(r / rational(2)));
        }
        if (eat_word("T[")) {
            const rational a = fraction_until(';');
            expect(';');
            const rational b = fraction_until(']');
            expect(']');
            theta_factor f{{a, b}, 1u, theta_arg::zero};
            if (eat_word("(z)")) {
                f.arg = theta_arg::zeta;
            }
            return {identity_term{cyclotomic(1), {::std::move(f)}}};
        }
        if (starts_atom() && ::std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            return poly_scalar(cyclotomic(integer()));
        }
        fail("unexpected input");
    }
    theta_poly factor()
    {
        auto p = atom();
        if (eat('^')) {
            const auto e = integer();
            if (e < 1) {
                fail("exponent must be positive");
            }
            auto base = p;
            for (::std::int64_t k = 1; k < e; ++k) {
                p = poly_mul(p, base);
            }
        }
        return p;
    }
    theta_poly product()
    {
        auto p = factor();
        while (starts_atom()) {
            p = poly_mul(p, factor());
        }
        return p;
    }
    theta_poly sum()
    {
        bool neg = false;
        if (eat('-')) {
            neg = true;
        } else {
            eat('+');
        }
        theta_poly p = poly_add({}, product(), neg);
        for (;;) {
            if (eat('+')) {
                p = poly_add(::std::move(p), product());
            } else if (eat('-')) {
                p = poly_add(::std::move(p), product(), true);
            } else {
                return p;
            }
        }
    }
    ::std::pair<theta_poly, theta_poly> side()
    {
        auto n = sum();
        theta_poly d = poly_scalar(cyclotomic(1));
        if (eat('/')) {
            d = product();
        }
        return {::std::move(n), ::std::move(d)};
    }

public:
    explicit notation_parser(::std::string_view s) : s_(s) {}

    theta_poly parse()
    {
        auto [a, b] = side();
        theta_poly r = ::std::move(a);
        if (eat('=')) {
            auto [c, d] = side();
            r = poly_add(poly_mul(r, d), poly_mul(c, b), true);
        } else {
            r = poly_mul(r, b);
        }
        skip();
        if (i_ != s_.size()) {
            fail("trailing input");
        }
        return r;
    }
};

} // namespace detail

// Structural checks shared by every way of building an identity: nonempty,
// nonzero scalars, positive powers, homogeneity, kind consistent with the
// factor arguments. Characteristics are reduced into [0,2)^2.
inline identity finalize_identity(identity i)
{
    if (i.id.empty()) {
        throw catalog_error("identity without id");
    }
    if (i.terms.empty()) {
        throw catalog_error("identity has no terms", i.id);
    }
    bool any_zeta = false;
    for (auto &t : i.terms) {
        if (t.scalar.is_zero()) {
            throw catalog_error("term with zero scalar", i.id);
        }
        for (const auto &f : t.factors) {
            if (f.power < 1u) {
                throw catalog_error("factor power must be positive", i.id);
            }
            any_zeta = any_zeta || f.arg == theta_arg::zeta;
        }
        detail::reduce_term(t);
    }
    const unsigned d = i.terms.front().degree();
    for (::std::size_t k = 1; k < i.terms.size(); ++k) {
        if (i.terms[k].degree() != d) {
            throw catalog_error("not homogeneous: term 0 has degree " + ::std::to_string(d) + ", term "
                                    + ::std::to_string(k) + " has degree " + ::std::to_string(i.terms[k].degree()),
                                i.id);
        }
    }
    if (i.kind == identity_kind::constant && any_zeta) {
        throw catalog_error("constant identity has a zeta-dependent factor", i.id);
    }
    return i;
}

// Builds an identity from the compact notation documented above.
inline identity identity_from_notation(::std::string id, ::std::string_view text, ::std::string ref = {},
                                       expected_status expected = expected_status::holds)
{
    identity i;
    i.id = ::std::move(id);
    i.ref = ::std::move(ref);
    i.expected = expected;
    try {
        i.terms = detail::notation_parser(text).parse();
    } catch (const catalog_error &e) {
        throw catalog_error(e.what(), i.id);
    }
    for (const auto &t : i.terms) {
        for (const auto &f : t.factors) {
            if (f.arg == theta_arg::zeta) {
                i.kind = identity_kind::function;
            }
        }
    }
    return finalize_identity(::std::move(i));
}

namespace detail
{

inline ::std::pair<::std::size_t, ::std::size_t> line_column(::std::string_view text, ::std::size_t byte)
{
    ::std::size_t line = 1, col = 1;
    for (::std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline nlohmann::json parse_json_text(::std::string_view text)
{
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        auto [l, c] = line_column(text, e.byte);
        ::std::string msg = e.what();
        if (auto p = msg.find("syntax error"); p != ::std::string::npos) {
            msg = msg.substr(p);
        }
        throw catalog_error(msg, {}, l, c);
    }
}

inline void only_fields(const nlohmann::json &j, ::std::initializer_list<::std::string_view> allowed,
                        const ::std::string &where)
{
    if (!j.is_object()) {
        throw catalog_error("expected an object", where);
    }
    for (const auto &[k, v] : j.items()) {
        if (::std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            throw catalog_error("unknown field '" + k + "'", where);
        }
    }
}

inline const nlohmann::json &field(const nlohmann::json &j, const char *name, const ::std::string &where)
{
    auto it = j.find(name);
    if (it == j.end()) {
        throw catalog_error(::std::string("missing field '") + name + "'", where);
    }
    return *it;
}

inline ::std::string string_field(const nlohmann::json &j, const char *name, const ::std::string &where)
{
    const auto &v = field(j, name, where);
    if (!v.is_string()) {
        throw catalog_error(::std::string("field '") + name + "' must be a string", where);
    }
    return v.get<::std::string>();
}

inline rational rational_field(const nlohmann::json &j, const char *name, const ::std::string &where)
{
    const auto s = string_field(j, name, where);
    try {
        return rational::parse(s);
    } catch (const ::std::exception &e) {
        throw catalog_error(e.what(), where + "/" + name);
    }
}

inline identity identity_from_json(const nlohmann::json &j, const ::std::string &where)
{
    only_fields(j, {"id", "kind", "ref", "expected", "terms"}, where);
    identity i;
    i.id = string_field(j, "id", where);
    const auto kind = string_field(j, "kind", where);
    if (kind == "constant") {
        i.kind = identity_kind::constant;
    } else if (kind == "function") {
        i.kind = identity_kind::function;
    } else {
        throw catalog_error("kind must be \"constant\" or \"function\"", where + "/kind");
    }
    if (j.contains("ref")) {
        i.ref = string_field(j, "ref", where);
    }
    if (j.contains("expected")) {
        const auto e = string_field(j, "expected", where);
        if (e == "holds") {
            i.expected = expected_status::holds;
        } else if (e == "suspect") {
            i.expected = expected_status::suspect;
        } else {
            throw catalog_error("expected must be \"holds\" or \"suspect\"", where + "/expected");
        }
    }
    const auto &terms = field(j, "terms", where);
    if (!terms.is_array()) {
        throw catalog_error("terms must be an array", where + "/terms");
    }
    for (::std::size_t k = 0; k < terms.size(); ++k) {
        const auto tw = where + "/terms/" + ::std::to_string(k);
        only_fields(terms[k], {"scalar", "factors"}, tw);
        identity_term t;
        try {
            t.scalar = cyclotomic::parse(string_field(terms[k], "scalar", tw));
        } catch (const catalog_error &) {
            throw;
        } catch (const ::std::exception &e) {
            throw catalog_error(e.what(), tw + "/scalar");
        }
        const auto &fs = field(terms[k], "factors", tw);
        if (!fs.is_array()) {
            throw catalog_error("factors must be an array", tw + "/factors");
        }
        for (::std::size_t m = 0; m < fs.size(); ++m) {
            const auto fw = tw + "/factors/" + ::std::to_string(m);
            only_fields(fs[m], {"eps", "epsp", "pow", "arg"}, fw);
            theta_factor f;
            f.ch = {rational_field(fs[m], "eps", fw), rational_field(fs[m], "epsp", fw)};
            const auto &p = field(fs[m], "pow", fw);
            if (!p.is_number_integer() || p.get<::std::int64_t>() < 1) {
                throw catalog_error("pow must be a positive integer", fw + "/pow");
            }
            f.power = p.get<unsigned>();
            const auto arg = string_field(fs[m], "arg", fw);
            if (arg == "zero") {
                f.arg = theta_arg::zero;
            } else if (arg == "zeta") {
                f.arg = theta_arg::zeta;
            } else {
                throw catalog_error("arg must be \"zero\" or \"zeta\"", fw + "/arg");
            }
            t.factors.push_back(::std::move(f));
        }
        i.terms.push_back(::std::move(t));
    }
    try {
        return finalize_identity(::std::move(i));
    } catch (const catalog_error &e) {
        throw catalog_error(e.what(), where);
    }
}

} // namespace detail

inline nlohmann::ordered_json identity_to_json(const identity &i)
{
    nlohmann::ordered_json j;
    j["id"] = i.id;
    j["kind"] = to_string(i.kind);
    j["ref"] = i.ref;
    j["expected"] = to_string(i.expected);
    auto terms = nlohmann::ordered_json::array();
    for (const auto &t : i.terms) {
        nlohmann::ordered_json jt;
        jt["scalar"] = t.scalar.to_string();
        auto fs = nlohmann::ordered_json::array();
        for (const auto &f : t.factors) {
            nlohmann::ordered_json jf;
            jf["eps"] = f.ch.eps.to_fraction_string();
            jf["epsp"] = f.ch.epsp.to_fraction_string();
            jf["pow"] = f.power;
            jf["arg"] = f.arg == theta_arg::zero ? "zero" : "zeta";
            fs.push_back(::std::move(jf));
        }
        jt["factors"] = ::std::move(fs);
        terms.push_back(::std::move(jt));
    }
    j["terms"] = ::std::move(terms);
    return j;
}

inline ::std::string serialize_identity(const identity &i)
{
    return identity_to_json(i).dump(2);
}

inline ::std::string serialize_catalog(const ::std::vector<identity> &cat)
{
    auto a = nlohmann::ordered_json::array();
    for (const auto &i : cat) {
        a.push_back(identity_to_json(i));
    }
    return a.dump(2);
}

// One identity object.
inline identity parse_identity(::std::string_view text)
{
    return detail::identity_from_json(detail::parse_json_text(text), "");
}

// A top-level array of identity objects; ids must be unique.
inline ::std::vector<identity> parse_catalog(::std::string_view text)
{
    const auto j = detail::parse_json_text(text);
    if (!j.is_array()) {
        throw catalog_error("top level must be an array");
    }
    ::std::vector<identity> out;
    ::std::set<::std::string> seen;
    for (::std::size_t k = 0; k < j.size(); ++k) {
        auto i = detail::identity_from_json(j[k], "/" + ::std::to_string(k));
        if (!seen.insert(i.id).second) {
            throw catalog_error("duplicate id '" + i.id + "'", "/" + ::std::to_string(k));
        }
        out.push_back(::std::move(i));
    }
    return out;
}

inline ::std::vector<identity> load_catalog(const ::std::string &path)
{
    ::std::ifstream in(path, ::std::ios::binary);
    if (!in) {
        throw catalog_error("cannot open '" + path + "'");
    }
    ::std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

// Negates the scalar of term (seed mod #terms).
inline identity corrupt_identity(identity i, ::std::uint64_t seed)
{
    if (i.terms.empty()) {
        throw ::std::invalid_argument("corrupt_identity: identity has no terms");
    }
    auto &t = i.terms[seed % i.terms.size()];
    t.scalar = -t.scalar;
    return i;
}

// Characteristics a builtin entry may use: the twelve level-5 ones, the
// half-integer ones and the level-3 family (both entries multiples of 1/3).
inline bool hygienic_characteristic(const characteristic &c)
{
    const auto c0 = reduce_char(c).first;
    auto in = [](const rational &r, ::std::int64_t q) { return (r * rational(q)).is_integer(); };
    if (in(c0.eps, 1) && in(c0.epsp, 1)) {
        return true;
    }
    if (in(c0.eps, 3) && in(c0.epsp, 3)) {
        return true;
    }
    const rational e5 = c0.epsp * rational(5);
    const bool odd_fifth = e5.is_integer() && e5.floor() % 2 == 1;
    if ((c0.eps == rational(1, 5) || c0.eps == rational(3, 5)) && odd_fifth) {
        return true;
    }
    return c0.eps == rational(1) && (c0.epsp == rational(1, 5) || c0.epsp == rational(3, 5));
}

// One builtin entry: group, id, description, expected status, notation.
struct catalog_entry {
    const char *group;
    const char *id;
    const char *ref;
    expected_status expected;
    const char *notation;
};

// Entry counts per group of the builtin corpus.
namespace corpus_counts
{
inline constexpr ::std::size_t classical = 3;
inline constexpr ::std::size_t quintic = 5;
inline constexpr ::std::size_t three_theta = 10;
inline constexpr ::std::size_t ratio = 10;
inline constexpr ::std::size_t cubic_expr = 10;
inline constexpr ::std::size_t two_theta = 10;
inline constexpr ::std::size_t rational_expr = 20;
inline constexpr ::std::size_t algebraic = 10;
inline constexpr ::std::size_t cross = 5;
inline constexpr ::std::size_t total = 83;
} // namespace corpus_counts

inline const ::std::vector<catalog_entry> &builtin_entries()
{
    static const ::std::vector<catalog_entry> table = {
        {"classical", "jacobi-quartic", "Jacobi quartic", expected_status::holds,
         "T[0;0]^4 = T[1;0]^4 + T[0;1]^4"},
        {"classical", "fk-cubic-1", "first cubic identity in thirds", expected_status::holds,
         "T[1/3;1/3]^3 + T[1/3;5/3]^3 = T[1/3;1]^3"},
        {"classical", "fk-cubic-2", "second cubic identity in thirds", expected_status::holds,
         "e(1/3) T[1/3;1/3]^3 + e(2/3) T[1/3;5/3]^3 = T[1;1/3]^3"},
        {"quintic", "quintic-eps15", "quintic sum over eps' for eps = 1/5", expected_status::holds,
         "T[1/5;1/5]^5 - T[1/5;3/5]^5 + T[1/5;1]^5 - T[1/5;7/5]^5 + T[1/5;9/5]^5"},
        {"quintic", "quintic-eps35", "quintic sum over eps' for eps = 3/5", expected_status::holds,
         "T[3/5;1/5]^5 - T[3/5;3/5]^5 + T[3/5;1]^5 - T[3/5;7/5]^5 + T[3/5;9/5]^5"},
        {"quintic", "quintic-epsp15", "quintic sum over eps for eps' = 1/5", expected_status::holds,
         "z5 T[1/5;1/5]^5 + z5^3 T[3/5;1/5]^5 + T[1;1/5]^5 - z5^2 T[3/5;9/5]^5 - z5^4 T[1/5;9/5]^5"},
        {"quintic", "quintic-epsp35-printed", "quintic sum over eps for eps' = 3/5, variant whose last two terms share the factor [3/5;7/5]", expected_status::suspect,
         "z5^3 T[1/5;3/5]^5 + z5^4 T[3/5;3/5]^5 + T[1;3/5]^5 - z5 T[3/5;7/5]^5 - z5^2 T[3/5;7/5]^5"},
        {"quintic", "quintic-epsp35", "quintic sum over eps for eps' = 3/5, last factor by symmetry with eps' = 1/5", expected_status::holds,
         "z5^3 T[1/5;3/5]^5 + z5^4 T[3/5;3/5]^5 + T[1;3/5]^5 - z5 T[3/5;7/5]^5 - z5^2 T[1/5;7/5]^5"},
        {"three-theta", "three-theta-j1-k5", "three-theta relation, eps = 1/5, without eps' = 1", expected_status::holds,
         "T[1;3/5] T[1/5;1/5](z)^2 T[1/5;3/5](z) + z5^2 T[1;1/5] T[1/5;3/5](z)^2 T[1/5;9/5](z) - z5^4 T[1;3/5] T[1/5;9/5](z)^2 T[1/5;7/5](z) - z5^2 T[1;1/5] T[1/5;7/5](z)^2 T[1/5;1/5](z)"},
        {"three-theta", "three-theta-j1-k7", "three-theta relation, eps = 1/5, without eps' = 7/5", expected_status::holds,
         "T[1;1/5] T[1/5;1/5](z)^2 T[1/5;1](z) - z5^2 T[1;3/5] T[1/5;1](z)^2 T[1/5;7/5](z) + z5^2 T[1;1/5] T[1/5;7/5](z)^2 T[1/5;3/5](z) - T[1;3/5] T[1/5;3/5](z)^2 T[1/5;1/5](z)"},
        {"three-theta", "three-theta-j1-k9", "three-theta relation, eps = 1/5, without eps' = 9/5", expected_status::holds,
         "T[1;1/5] T[1/5;1/5](z)^2 T[1/5;7/5](z) - z5^2 T[1;3/5] T[1/5;7/5](z)^2 T[1/5;1](z) + z5^2 T[1;1/5] T[1/5;1](z)^2 T[1/5;9/5](z) + z5^2 T[1;3/5] T[1/5;9/5](z)^2 T[1/5;1/5](z)"},
        {"three-theta", "three-theta-j1-k1", "three-theta relation, eps = 1/5, without eps' = 1/5", expected_status::holds,
         "T[1;3/5] T[1/5;1/5](z)^2 T[1/5;9/5](z) + z5^2 T[1;1/5] T[1/5;9/5](z)^2 T[1/5;3/5](z) - T[1;3/5] T[1/5;3/5](z)^2 T[1/5;1](z) + T[1;1/5] T[1/5;1](z)^2 T[1/5;1/5](z)"},
        {"three-theta", "three-theta-j1-k3", "three-theta relation, eps = 1/5, without eps' = 3/5", expected_status::holds,
         "T[1;1/5] T[1/5;3/5](z)^2 T[1/5;7/5](z) - z5^2 T[1;3/5] T[1/5;7/5](z)^2 T[1/5;9/5](z) + z5^2 T[1;1/5] T[1/5;9/5](z)^2 T[1/5;1](z) - T[1;3/5] T[1/5;1](z)^2 T[1/5;3/5](z)"},
        {"three-theta", "three-theta-j3-k5", "three-theta relation, eps = 3/5, without eps' = 1", expected_status::holds,
         "T[1;3/5] T[3/5;1/5](z)^2 T[3/5;3/5](z) + z5 T[1;1/5] T[3/5;3/5](z)^2 T[3/5;9/5](z) - z5^2 T[1;3/5] T[3/5;9/5](z)^2 T[3/5;7/5](z) - z5 T[1;1/5] T[3/5;7/5](z)^2 T[3/5;1/5](z)"},
        {"three-theta", "three-theta-j3-k7", "three-theta relation, eps = 3/5, without eps' = 7/5", expected_status::holds,
         "T[1;1/5] T[3/5;1/5](z)^2 T[3/5;1](z) - z5 T[1;3/5] T[3/5;1](z)^2 T[3/5;7/5](z) + z5 T[1;1/5] T[3/5;7/5](z)^2 T[3/5;3/5](z) - T[1;3/5] T[3/5;3/5](z)^2 T[3/5;1/5](z)"},
        {"three-theta", "three-theta-j3-k9", "three-theta relation, eps = 3/5, without eps' = 9/5", expected_status::holds,
         "T[1;1/5] T[3/5;1/5](z)^2 T[3/5;7/5](z) - z5 T[1;3/5] T[3/5;7/5](z)^2 T[3/5;1](z) + z5 T[1;1/5] T[3/5;1](z)^2 T[3/5;9/5](z) + z5 T[1;3/5] T[3/5;9/5](z)^2 T[3/5;1/5](z)"},
        {"three-theta", "three-theta-j3-k1", "three-theta relation, eps = 3/5, without eps' = 1/5", expected_status::holds,
         "T[1;3/5] T[3/5;1/5](z)^2 T[3/5;9/5](z) + z5 T[1;1/5] T[3/5;9/5](z)^2 T[3/5;3/5](z) - T[1;3/5] T[3/5;3/5](z)^2 T[3/5;1](z) + T[1;1/5] T[3/5;1](z)^2 T[3/5;1/5](z)"},
        {"three-theta", "three-theta-j3-k3", "three-theta relation, eps = 3/5, without eps' = 3/5", expected_status::holds,
         "T[1;1/5] T[3/5;3/5](z)^2 T[3/5;7/5](z) - z5 T[1;3/5] T[3/5;7/5](z)^2 T[3/5;9/5](z) + z5 T[1;1/5] T[3/5;9/5](z)^2 T[3/5;1](z) - T[1;3/5] T[3/5;1](z)^2 T[3/5;3/5](z)"},
        {"ratio", "ratio-j1-del-k5", "ratio of the two eps = 1 constants via eps = 1/5 constants without eps' = 1, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {T[1/5;1/5]^2 T[1/5;3/5] - z5^4 T[1/5;9/5]^2 T[1/5;7/5]} / {z5^2 T[1/5;7/5]^2 T[1/5;1/5] - z5^2 T[1/5;3/5]^2 T[1/5;9/5]}"},
        {"ratio", "ratio-j1-del-k9", "ratio of the two eps = 1 constants via eps = 1/5 constants without eps' = 9/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {z5^2 T[1/5;1]^2 T[1/5;7/5] + T[1/5;3/5]^2 T[1/5;1/5]} / {T[1/5;1/5]^2 T[1/5;1] + z5^2 T[1/5;7/5]^2 T[1/5;3/5]}"},
        {"ratio", "ratio-j1-del-k3", "ratio of the two eps = 1 constants via eps = 1/5 constants without eps' = 3/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {z5^2 T[1/5;7/5]^2 T[1/5;1] - z5^2 T[1/5;9/5]^2 T[1/5;1/5]} / {T[1/5;1/5]^2 T[1/5;7/5] + z5^2 T[1/5;1]^2 T[1/5;9/5]}"},
        {"ratio", "ratio-j1-del-k7", "ratio of the two eps = 1 constants via eps = 1/5 constants without eps' = 7/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {- T[1/5;1/5]^2 T[1/5;9/5] + T[1/5;3/5]^2 T[1/5;1]} / {z5^2 T[1/5;9/5]^2 T[1/5;3/5] + T[1/5;1]^2 T[1/5;1/5]}"},
        {"ratio", "ratio-j1-del-k1", "ratio of the two eps = 1 constants via eps = 1/5 constants without eps' = 1/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {z5^2 T[1/5;7/5]^2 T[1/5;9/5] + T[1/5;1]^2 T[1/5;3/5]} / {T[1/5;3/5]^2 T[1/5;7/5] + z5^2 T[1/5;9/5]^2 T[1/5;1]}"},
        {"ratio", "ratio-j3-del-k5", "ratio of the two eps = 1 constants via eps = 3/5 constants without eps' = 1, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {T[3/5;1/5]^2 T[3/5;3/5] - z5^2 T[3/5;9/5]^2 T[3/5;7/5]} / {z5 T[3/5;7/5]^2 T[3/5;1/5] - z5 T[3/5;3/5]^2 T[3/5;9/5]}"},
        {"ratio", "ratio-j3-del-k9", "ratio of the two eps = 1 constants via eps = 3/5 constants without eps' = 9/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {z5 T[3/5;1]^2 T[3/5;7/5] + T[3/5;3/5]^2 T[3/5;1/5]} / {T[3/5;1/5]^2 T[3/5;1] + z5 T[3/5;7/5]^2 T[3/5;3/5]}"},
        {"ratio", "ratio-j3-del-k3", "ratio of the two eps = 1 constants via eps = 3/5 constants without eps' = 3/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {z5 T[3/5;7/5]^2 T[3/5;1] - z5 T[3/5;9/5]^2 T[3/5;1/5]} / {T[3/5;1/5]^2 T[3/5;7/5] + z5 T[3/5;1]^2 T[3/5;9/5]}"},
        {"ratio", "ratio-j3-del-k7", "ratio of the two eps = 1 constants via eps = 3/5 constants without eps' = 7/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {- T[3/5;1/5]^2 T[3/5;9/5] + T[3/5;3/5]^2 T[3/5;1]} / {z5 T[3/5;9/5]^2 T[3/5;3/5] + T[3/5;1]^2 T[3/5;1/5]}"},
        {"ratio", "ratio-j3-del-k1", "ratio of the two eps = 1 constants via eps = 3/5 constants without eps' = 1/5, cross-multiplied", expected_status::holds,
         "T[1;1/5] / T[1;3/5] = {z5 T[3/5;7/5]^2 T[3/5;9/5] + T[3/5;1]^2 T[3/5;3/5]} / {T[3/5;3/5]^2 T[3/5;7/5] + z5 T[3/5;9/5]^2 T[3/5;1]}"},
        {"cubic-expr", "cubic-expr-1a", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;1/5] = z5^2 {T[3/5;9/5]^3 T[1/5;1] + z5^2 T[3/5;3/5]^3 T[1/5;9/5]} / T[1/5;7/5]^3"},
        {"cubic-expr", "cubic-expr-1b-printed", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied; variant with the scalars under test", expected_status::suspect,
         "T[1;3/5] = z5 {T[1/5;3/5]^3 T[3/5;1] - z5^2 T[1/5;1/5]^3 T[3/5;7/5]} / T[3/5;1/5]^3"},
        {"cubic-expr", "cubic-expr-1b", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;3/5] = z5 {T[1/5;3/5]^3 T[3/5;1] - T[1/5;1/5]^3 T[3/5;7/5]} / T[3/5;1/5]^3"},
        {"cubic-expr", "cubic-expr-2a", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;1/5] = z5 {z5 T[1/5;9/5]^3 T[3/5;1] + T[1/5;3/5]^3 T[3/5;1/5]} / T[3/5;3/5]^3"},
        {"cubic-expr", "cubic-expr-2b", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;3/5] = {- T[3/5;7/5]^3 T[1/5;1] + T[3/5;9/5]^3 T[1/5;7/5]} / T[1/5;1/5]^3"},
        {"cubic-expr", "cubic-expr-3a-printed", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied; variant with the scalars under test", expected_status::suspect,
         "T[1;1/5] = z5 {T[1/5;1/5]^3 T[3/5;1] - T[1/5;7/5]^3 T[3/5;9/5]} / T[3/5;7/5]^3"},
        {"cubic-expr", "cubic-expr-3a", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;1/5] = - z5^2 {T[1/5;1/5]^3 T[3/5;1] + z5 T[1/5;7/5]^3 T[3/5;9/5]} / T[3/5;7/5]^3"},
        {"cubic-expr", "cubic-expr-3b", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;3/5] = z5^4 {T[3/5;3/5]^3 T[1/5;1] - T[3/5;1/5]^3 T[1/5;3/5]} / T[1/5;9/5]^3"},
        {"cubic-expr", "cubic-expr-4a", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;1/5] = - z5^2 {T[3/5;1/5]^3 T[1/5;1] + z5^3 T[3/5;7/5]^3 T[1/5;1/5]} / T[1/5;3/5]^3"},
        {"cubic-expr", "cubic-expr-4b", "eps = 1 constant as a cubic expression in eps = 1/5, 3/5 constants, cross-multiplied", expected_status::holds,
         "T[1;3/5] = - z5^3 {T[1/5;7/5]^3 T[3/5;1] - T[1/5;9/5]^3 T[3/5;3/5]} / T[3/5;9/5]^3"},
        {"two-theta", "two-theta-j1-s10", "two-theta relation, eps = 1/5, squared factor eps' = 1", expected_status::holds,
         "T[1;3/5]^2 T[1/5;1/5](z) T[1/5;9/5](z) - T[1;1/5]^2 T[1/5;3/5](z) T[1/5;7/5](z) + T[1;1/5] T[1;3/5] T[1/5;1](z)^2"},
        {"two-theta", "two-theta-j1-s2", "two-theta relation, eps = 1/5, squared factor eps' = 1/5", expected_status::holds,
         "z5^2 T[1;1/5]^2 T[1/5;3/5](z) T[1/5;9/5](z) - z5^2 T[1;3/5]^2 T[1/5;1](z) T[1/5;7/5](z) + T[1;1/5] T[1;3/5] T[1/5;1/5](z)^2"},
        {"two-theta", "two-theta-j1-s4", "two-theta relation, eps = 1/5, squared factor eps' = 7/5", expected_status::holds,
         "T[1;3/5]^2 T[1/5;1/5](z) T[1/5;3/5](z) + z5^2 T[1;1/5]^2 T[1/5;1](z) T[1/5;9/5](z) - z5^2 T[1;1/5] T[1;3/5] T[1/5;7/5](z)^2"},
        {"two-theta", "two-theta-j1-s6", "two-theta relation, eps = 1/5, squared factor eps' = 3/5", expected_status::holds,
         "T[1;1/5]^2 T[1/5;1/5](z) T[1/5;1](z) + z5^2 T[1;3/5]^2 T[1/5;7/5](z) T[1/5;9/5](z) - T[1;1/5] T[1;3/5] T[1/5;3/5](z)^2"},
        {"two-theta", "two-theta-j1-s8", "two-theta relation, eps = 1/5, squared factor eps' = 9/5", expected_status::holds,
         "T[1;1/5]^2 T[1/5;1/5](z) T[1/5;7/5](z) - T[1;3/5]^2 T[1/5;3/5](z) T[1/5;1](z) + z5^2 T[1;1/5] T[1;3/5] T[1/5;9/5](z)^2"},
        {"two-theta", "two-theta-j3-s10", "two-theta relation, eps = 3/5, squared factor eps' = 1", expected_status::holds,
         "T[1;3/5]^2 T[3/5;1/5](z) T[3/5;9/5](z) - T[1;1/5]^2 T[3/5;3/5](z) T[3/5;7/5](z) + T[1;1/5] T[1;3/5] T[3/5;1](z)^2"},
        {"two-theta", "two-theta-j3-s2", "two-theta relation, eps = 3/5, squared factor eps' = 1/5", expected_status::holds,
         "z5 T[1;1/5]^2 T[3/5;3/5](z) T[3/5;9/5](z) - z5 T[1;3/5]^2 T[3/5;1](z) T[3/5;7/5](z) + T[1;1/5] T[1;3/5] T[3/5;1/5](z)^2"},
        {"two-theta", "two-theta-j3-s4", "two-theta relation, eps = 3/5, squared factor eps' = 7/5", expected_status::holds,
         "T[1;3/5]^2 T[3/5;1/5](z) T[3/5;3/5](z) + z5 T[1;1/5]^2 T[3/5;1](z) T[3/5;9/5](z) - z5 T[1;1/5] T[1;3/5] T[3/5;7/5](z)^2"},
        {"two-theta", "two-theta-j3-s6", "two-theta relation, eps = 3/5, squared factor eps' = 3/5", expected_status::holds,
         "T[1;1/5]^2 T[3/5;1/5](z) T[3/5;1](z) + z5 T[1;3/5]^2 T[3/5;7/5](z) T[3/5;9/5](z) - T[1;1/5] T[1;3/5] T[3/5;3/5](z)^2"},
        {"two-theta", "two-theta-j3-s8", "two-theta relation, eps = 3/5, squared factor eps' = 9/5", expected_status::holds,
         "T[1;1/5]^2 T[3/5;1/5](z) T[3/5;7/5](z) - T[1;3/5]^2 T[3/5;3/5](z) T[3/5;1](z) + z5 T[1;1/5] T[1;3/5] T[3/5;9/5](z)^2"},
        {"rational", "rational-j1-k1-a", "eps = 1/5 constant with eps' = 1/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[1/5;1/5] = {T[1/5;3/5] T[1/5;7/5]^3 - T[1/5;1]^3 T[1/5;9/5]} {T[1/5;7/5]^2 T[1/5;9/5] + z5^3 T[1/5;3/5] T[1/5;1]^2} / {z5^3 T[1/5;3/5]^2 T[1/5;7/5] + T[1/5;1] T[1/5;9/5]^2}^2"},
        {"rational", "rational-j1-k1-b", "eps = 1/5 constant with eps' = 1/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[1/5;1/5] = {z5^2 T[1/5;1] T[1/5;9/5]^2 + T[1/5;3/5]^2 T[1/5;7/5]} {T[1/5;3/5]^3 T[1/5;1] - z5^4 T[1/5;7/5] T[1/5;9/5]^3} / {T[1/5;3/5] T[1/5;1]^2 + z5^2 T[1/5;7/5]^2 T[1/5;9/5]}^2"},
        {"rational", "rational-j1-k3-a", "eps = 1/5 constant with eps' = 3/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[1/5;3/5] = {z5^3 T[1/5;1/5]^2 T[1/5;7/5] + T[1/5;1]^2 T[1/5;9/5]} {T[1/5;1]^3 T[1/5;7/5] + z5^3 T[1/5;1/5]^3 T[1/5;9/5]} / {T[1/5;1/5] T[1/5;9/5]^2 - T[1/5;1] T[1/5;7/5]^2}^2"},
        {"rational", "rational-j1-k3-b", "eps = 1/5 constant with eps' = 3/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[1/5;3/5] = {z5^2 T[1/5;1] T[1/5;9/5]^3 + T[1/5;1/5] T[1/5;7/5]^3} {T[1/5;1] T[1/5;7/5]^2 - T[1/5;1/5] T[1/5;9/5]^2} / {T[1/5;1]^2 T[1/5;9/5] + z5^3 T[1/5;1/5]^2 T[1/5;7/5]}^2"},
        {"rational", "rational-j1-k5-a", "eps = 1/5 constant with eps' = 1 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[1/5;1] = {T[1/5;3/5] T[1/5;9/5]^3 - z5 T[1/5;1/5]^3 T[1/5;7/5]} {- T[1/5;1/5]^2 T[1/5;3/5] + z5^4 T[1/5;7/5] T[1/5;9/5]^2} / {- T[1/5;3/5]^2 T[1/5;9/5] + T[1/5;1/5] T[1/5;7/5]^2}^2"},
        {"rational", "rational-j1-k5-b", "eps = 1/5 constant with eps' = 1 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[1/5;1] = {- z5^2 T[1/5;3/5]^2 T[1/5;9/5] + z5^2 T[1/5;1/5] T[1/5;7/5]^2} {- z5^4 T[1/5;7/5]^3 T[1/5;9/5] + T[1/5;1/5] T[1/5;3/5]^3} / {z5^4 T[1/5;7/5] T[1/5;9/5]^2 - T[1/5;1/5]^2 T[1/5;3/5]}^2"},
        {"rational", "rational-j1-k7-a", "eps = 1/5 constant with eps' = 7/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[1/5;7/5] = {z5^2 T[1/5;3/5] T[1/5;9/5]^2 + T[1/5;1/5] T[1/5;1]^2} {T[1/5;3/5] T[1/5;1]^3 + z5^2 T[1/5;1/5] T[1/5;9/5]^3} / {T[1/5;3/5]^2 T[1/5;1] - T[1/5;1/5]^2 T[1/5;9/5]}^2"},
        {"rational", "rational-j1-k7-b", "eps = 1/5 constant with eps' = 7/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[1/5;7/5] = {T[1/5;3/5]^3 T[1/5;9/5] + z5^3 T[1/5;1/5]^3 T[1/5;1]} {- T[1/5;1/5]^2 T[1/5;9/5] + T[1/5;3/5]^2 T[1/5;1]} / {z5^2 T[1/5;3/5] T[1/5;9/5]^2 + T[1/5;1/5] T[1/5;1]^2}^2"},
        {"rational", "rational-j1-k9-a", "eps = 1/5 constant with eps' = 9/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[1/5;9/5] = {T[1/5;3/5]^3 T[1/5;7/5] - T[1/5;1/5] T[1/5;1]^3} {z5^2 T[1/5;1]^2 T[1/5;7/5] + T[1/5;1/5] T[1/5;3/5]^2} / {z5^2 T[1/5;3/5] T[1/5;7/5]^2 + T[1/5;1/5]^2 T[1/5;1]}^2"},
        {"rational", "rational-j1-k9-b", "eps = 1/5 constant with eps' = 9/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[1/5;9/5] = {T[1/5;3/5] T[1/5;7/5]^2 + z5^3 T[1/5;1/5]^2 T[1/5;1]} {- T[1/5;1/5]^3 T[1/5;3/5] + z5^4 T[1/5;1] T[1/5;7/5]^3} / {T[1/5;1/5] T[1/5;3/5]^2 + z5^2 T[1/5;1]^2 T[1/5;7/5]}^2"},
        {"rational", "rational-j3-k1-a", "eps = 3/5 constant with eps' = 1/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[3/5;1/5] = {T[3/5;3/5] T[3/5;7/5]^3 - T[3/5;1]^3 T[3/5;9/5]} {z5^4 T[3/5;3/5] T[3/5;1]^2 + T[3/5;7/5]^2 T[3/5;9/5]} / {z5^4 T[3/5;3/5]^2 T[3/5;7/5] + T[3/5;1] T[3/5;9/5]^2}^2"},
        {"rational", "rational-j3-k1-b", "eps = 3/5 constant with eps' = 1/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[3/5;1/5] = {z5 T[3/5;1] T[3/5;9/5]^2 + T[3/5;3/5]^2 T[3/5;7/5]} {T[3/5;3/5]^3 T[3/5;1] - z5^2 T[3/5;7/5] T[3/5;9/5]^3} / {T[3/5;3/5] T[3/5;1]^2 + z5 T[3/5;7/5]^2 T[3/5;9/5]}^2"},
        {"rational", "rational-j3-k3-a", "eps = 3/5 constant with eps' = 3/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[3/5;3/5] = {z5^4 T[3/5;1/5]^2 T[3/5;7/5] + T[3/5;1]^2 T[3/5;9/5]} {T[3/5;1]^3 T[3/5;7/5] + z5^4 T[3/5;1/5]^3 T[3/5;9/5]} / {- T[3/5;1] T[3/5;7/5]^2 + T[3/5;1/5] T[3/5;9/5]^2}^2"},
        {"rational", "rational-j3-k3-b", "eps = 3/5 constant with eps' = 3/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[3/5;3/5] = {z5 T[3/5;1] T[3/5;9/5]^3 + T[3/5;1/5] T[3/5;7/5]^3} {T[3/5;1] T[3/5;7/5]^2 - T[3/5;1/5] T[3/5;9/5]^2} / {T[3/5;1]^2 T[3/5;9/5] + z5^4 T[3/5;1/5]^2 T[3/5;7/5]}^2"},
        {"rational", "rational-j3-k5-a", "eps = 3/5 constant with eps' = 1 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[3/5;1] = {T[3/5;3/5] T[3/5;9/5]^3 - z5^3 T[3/5;1/5]^3 T[3/5;7/5]} {- T[3/5;1/5]^2 T[3/5;3/5] + z5^2 T[3/5;7/5] T[3/5;9/5]^2} / {- T[3/5;3/5]^2 T[3/5;9/5] + T[3/5;1/5] T[3/5;7/5]^2}^2"},
        {"rational", "rational-j3-k5-b", "eps = 3/5 constant with eps' = 1 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[3/5;1] = {- z5 T[3/5;3/5]^2 T[3/5;9/5] + z5 T[3/5;1/5] T[3/5;7/5]^2} {- z5^2 T[3/5;7/5]^3 T[3/5;9/5] + T[3/5;1/5] T[3/5;3/5]^3} / {z5^2 T[3/5;7/5] T[3/5;9/5]^2 - T[3/5;1/5]^2 T[3/5;3/5]}^2"},
        {"rational", "rational-j3-k7-a", "eps = 3/5 constant with eps' = 7/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[3/5;7/5] = {z5 T[3/5;3/5] T[3/5;9/5]^2 + T[3/5;1/5] T[3/5;1]^2} {T[3/5;3/5] T[3/5;1]^3 + z5 T[3/5;1/5] T[3/5;9/5]^3} / {- T[3/5;3/5]^2 T[3/5;1] + T[3/5;1/5]^2 T[3/5;9/5]}^2"},
        {"rational", "rational-j3-k7-b", "eps = 3/5 constant with eps' = 7/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[3/5;7/5] = {T[3/5;3/5]^3 T[3/5;9/5] + z5^4 T[3/5;1/5]^3 T[3/5;1]} {- T[3/5;1/5]^2 T[3/5;9/5] + T[3/5;3/5]^2 T[3/5;1]} / {z5 T[3/5;3/5] T[3/5;9/5]^2 + T[3/5;1/5] T[3/5;1]^2}^2"},
        {"rational", "rational-j3-k9-a", "eps = 3/5 constant with eps' = 9/5 as a rational expression in the other four (form a), cross-multiplied", expected_status::holds,
         "T[3/5;9/5] = {T[3/5;3/5]^3 T[3/5;7/5] - T[3/5;1/5] T[3/5;1]^3} {z5 T[3/5;1]^2 T[3/5;7/5] + T[3/5;1/5] T[3/5;3/5]^2} / {z5 T[3/5;3/5] T[3/5;7/5]^2 + T[3/5;1/5]^2 T[3/5;1]}^2"},
        {"rational", "rational-j3-k9-b", "eps = 3/5 constant with eps' = 9/5 as a rational expression in the other four (form b), cross-multiplied", expected_status::holds,
         "T[3/5;9/5] = {T[3/5;3/5] T[3/5;7/5]^2 + z5^4 T[3/5;1/5]^2 T[3/5;1]} {- T[3/5;1/5]^3 T[3/5;3/5] + z5^2 T[3/5;1] T[3/5;7/5]^3} / {T[3/5;1/5] T[3/5;3/5]^2 + z5 T[3/5;1]^2 T[3/5;7/5]}^2"},
        {"algebraic", "alg-j1-k1", "algebraic dependence among four eps = 1/5 constants without eps' = 1/5", expected_status::holds,
         "{T[1/5;3/5] T[1/5;1]^2 + z5^2 T[1/5;7/5]^2 T[1/5;9/5]}^3 {z5 T[1/5;3/5] T[1/5;7/5]^3 - z5 T[1/5;1]^3 T[1/5;9/5]} = {z5^3 T[1/5;3/5]^2 T[1/5;7/5] + T[1/5;1] T[1/5;9/5]^2}^3 {T[1/5;3/5]^3 T[1/5;1] - z5^4 T[1/5;7/5] T[1/5;9/5]^3}"},
        {"algebraic", "alg-j1-k3", "algebraic dependence among four eps = 1/5 constants without eps' = 3/5", expected_status::holds,
         "{T[1/5;1]^2 T[1/5;9/5] + z5^3 T[1/5;1/5]^2 T[1/5;7/5]}^3 {T[1/5;1]^3 T[1/5;7/5] + z5^3 T[1/5;1/5]^3 T[1/5;9/5]} = {T[1/5;1] T[1/5;7/5]^2 - T[1/5;1/5] T[1/5;9/5]^2}^3 {z5^2 T[1/5;1] T[1/5;9/5]^3 + T[1/5;1/5] T[1/5;7/5]^3}"},
        {"algebraic", "alg-j1-k5", "algebraic dependence among four eps = 1/5 constants without eps' = 1", expected_status::holds,
         "{z5^4 T[1/5;7/5] T[1/5;9/5]^2 - T[1/5;1/5]^2 T[1/5;3/5]}^3 {T[1/5;3/5] T[1/5;9/5]^3 - z5 T[1/5;1/5]^3 T[1/5;7/5]} = {T[1/5;3/5]^2 T[1/5;9/5] - T[1/5;1/5] T[1/5;7/5]^2}^3 {z5 T[1/5;7/5]^3 T[1/5;9/5] - z5^2 T[1/5;1/5] T[1/5;3/5]^3}"},
        {"algebraic", "alg-j1-k7", "algebraic dependence among four eps = 1/5 constants without eps' = 7/5", expected_status::holds,
         "{z5^2 T[1/5;3/5] T[1/5;9/5]^2 + T[1/5;1/5] T[1/5;1]^2}^3 {T[1/5;3/5] T[1/5;1]^3 + z5^2 T[1/5;1/5] T[1/5;9/5]^3} = {T[1/5;3/5]^2 T[1/5;1] - T[1/5;1/5]^2 T[1/5;9/5]}^3 {T[1/5;3/5]^3 T[1/5;9/5] + z5^3 T[1/5;1/5]^3 T[1/5;1]}"},
        {"algebraic", "alg-j1-k9", "algebraic dependence among four eps = 1/5 constants without eps' = 9/5", expected_status::holds,
         "{T[1/5;1/5] T[1/5;3/5]^2 + z5^2 T[1/5;1]^2 T[1/5;7/5]}^3 {T[1/5;3/5]^3 T[1/5;7/5] - T[1/5;1/5] T[1/5;1]^3} = {z5^2 T[1/5;3/5] T[1/5;7/5]^2 + T[1/5;1/5]^2 T[1/5;1]}^3 {- z5^3 T[1/5;1/5]^3 T[1/5;3/5] + z5^2 T[1/5;1] T[1/5;7/5]^3}"},
        {"algebraic", "alg-j3-k1", "algebraic dependence among four eps = 3/5 constants without eps' = 1/5", expected_status::holds,
         "{T[3/5;3/5] T[3/5;1]^2 + z5 T[3/5;7/5]^2 T[3/5;9/5]}^3 {z5^3 T[3/5;3/5] T[3/5;7/5]^3 - z5^3 T[3/5;1]^3 T[3/5;9/5]} = {z5^4 T[3/5;3/5]^2 T[3/5;7/5] + T[3/5;1] T[3/5;9/5]^2}^3 {T[3/5;3/5]^3 T[3/5;1] - z5^2 T[3/5;7/5] T[3/5;9/5]^3}"},
        {"algebraic", "alg-j3-k3", "algebraic dependence among four eps = 3/5 constants without eps' = 3/5", expected_status::holds,
         "{T[3/5;1]^2 T[3/5;9/5] + z5^4 T[3/5;1/5]^2 T[3/5;7/5]}^3 {T[3/5;1]^3 T[3/5;7/5] + z5^4 T[3/5;1/5]^3 T[3/5;9/5]} = {T[3/5;1] T[3/5;7/5]^2 - T[3/5;1/5] T[3/5;9/5]^2}^3 {z5 T[3/5;1] T[3/5;9/5]^3 + T[3/5;1/5] T[3/5;7/5]^3}"},
        {"algebraic", "alg-j3-k5", "algebraic dependence among four eps = 3/5 constants without eps' = 1", expected_status::holds,
         "{z5^2 T[3/5;7/5] T[3/5;9/5]^2 - T[3/5;1/5]^2 T[3/5;3/5]}^3 {T[3/5;3/5] T[3/5;9/5]^3 - z5^3 T[3/5;1/5]^3 T[3/5;7/5]} = {T[3/5;3/5]^2 T[3/5;9/5] - T[3/5;1/5] T[3/5;7/5]^2}^3 {z5^3 T[3/5;7/5]^3 T[3/5;9/5] - z5 T[3/5;1/5] T[3/5;3/5]^3}"},
        {"algebraic", "alg-j3-k7", "algebraic dependence among four eps = 3/5 constants without eps' = 7/5", expected_status::holds,
         "{z5 T[3/5;3/5] T[3/5;9/5]^2 + T[3/5;1/5] T[3/5;1]^2}^3 {T[3/5;3/5] T[3/5;1]^3 + z5 T[3/5;1/5] T[3/5;9/5]^3} = {T[3/5;3/5]^2 T[3/5;1] - T[3/5;1/5]^2 T[3/5;9/5]}^3 {T[3/5;3/5]^3 T[3/5;9/5] + z5^4 T[3/5;1/5]^3 T[3/5;1]}"},
        {"algebraic", "alg-j3-k9", "algebraic dependence among four eps = 3/5 constants without eps' = 9/5", expected_status::holds,
         "{T[3/5;1/5] T[3/5;3/5]^2 + z5 T[3/5;1]^2 T[3/5;7/5]}^3 {T[3/5;3/5]^3 T[3/5;7/5] - T[3/5;1/5] T[3/5;1]^3} = {z5 T[3/5;3/5] T[3/5;7/5]^2 + T[3/5;1/5]^2 T[3/5;1]}^3 {- z5^4 T[3/5;1/5]^3 T[3/5;3/5] + z5 T[3/5;1] T[3/5;7/5]^3}"},
        {"cross", "cross-k5", "eps = 1/5 and eps = 3/5 ratio expressions without eps' = 1 agree, cross-multiplied", expected_status::holds,
         "{T[1/5;1/5]^2 T[1/5;3/5] - z5^4 T[1/5;9/5]^2 T[1/5;7/5]} {z5 T[3/5;7/5]^2 T[3/5;1/5] - z5 T[3/5;3/5]^2 T[3/5;9/5]} = {T[3/5;1/5]^2 T[3/5;3/5] - z5^2 T[3/5;9/5]^2 T[3/5;7/5]} {z5^2 T[1/5;7/5]^2 T[1/5;1/5] - z5^2 T[1/5;3/5]^2 T[1/5;9/5]}"},
        {"cross", "cross-k9", "eps = 1/5 and eps = 3/5 ratio expressions without eps' = 9/5 agree, cross-multiplied", expected_status::holds,
         "{z5^2 T[1/5;1]^2 T[1/5;7/5] + T[1/5;3/5]^2 T[1/5;1/5]} {T[3/5;1/5]^2 T[3/5;1] + z5 T[3/5;7/5]^2 T[3/5;3/5]} = {z5 T[3/5;1]^2 T[3/5;7/5] + T[3/5;3/5]^2 T[3/5;1/5]} {T[1/5;1/5]^2 T[1/5;1] + z5^2 T[1/5;7/5]^2 T[1/5;3/5]}"},
        {"cross", "cross-k3", "eps = 1/5 and eps = 3/5 ratio expressions without eps' = 3/5 agree, cross-multiplied", expected_status::holds,
         "{z5^2 T[1/5;7/5]^2 T[1/5;1] - z5^2 T[1/5;9/5]^2 T[1/5;1/5]} {T[3/5;1/5]^2 T[3/5;7/5] + z5 T[3/5;1]^2 T[3/5;9/5]} = {z5 T[3/5;7/5]^2 T[3/5;1] - z5 T[3/5;9/5]^2 T[3/5;1/5]} {T[1/5;1/5]^2 T[1/5;7/5] + z5^2 T[1/5;1]^2 T[1/5;9/5]}"},
        {"cross", "cross-k7", "eps = 1/5 and eps = 3/5 ratio expressions without eps' = 7/5 agree, cross-multiplied", expected_status::holds,
         "{- T[1/5;1/5]^2 T[1/5;9/5] + T[1/5;3/5]^2 T[1/5;1]} {z5 T[3/5;9/5]^2 T[3/5;3/5] + T[3/5;1]^2 T[3/5;1/5]} = {- T[3/5;1/5]^2 T[3/5;9/5] + T[3/5;3/5]^2 T[3/5;1]} {z5^2 T[1/5;9/5]^2 T[1/5;3/5] + T[1/5;1]^2 T[1/5;1/5]}"},
        {"cross", "cross-k1", "eps = 1/5 and eps = 3/5 ratio expressions without eps' = 1/5 agree, cross-multiplied", expected_status::holds,
         "{z5^2 T[1/5;7/5]^2 T[1/5;9/5] + T[1/5;1]^2 T[1/5;3/5]} {T[3/5;3/5]^2 T[3/5;7/5] + z5 T[3/5;9/5]^2 T[3/5;1]} = {z5 T[3/5;7/5]^2 T[3/5;9/5] + T[3/5;1]^2 T[3/5;3/5]} {T[1/5;3/5]^2 T[1/5;7/5] + z5^2 T[1/5;9/5]^2 T[1/5;1]}"},
    };
    return table;
}

// The builtin corpus, expanded once and shared.
inline const ::std::vector<identity> &builtin_catalog()
{
    static const ::std::vector<identity> cat = [] {
        ::std::vector<identity> v;
        v.reserve(builtin_entries().size());
        for (const auto &e : builtin_entries()) {
            v.push_back(identity_from_notation(e.id, e.notation, e.ref, e.expected));
        }
        return v;
    }();
    return cat;
}

inline const identity *find_identity(const ::std::vector<identity> &cat, ::std::string_view id)
{
    for (const auto &i : cat) {
        if (i.id == id) {
            return &i;
        }
    }
    return nullptr;
}

} // namespace qtheta

#endif
