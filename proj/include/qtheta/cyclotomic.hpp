// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_CYCLOTOMIC_HPP
#define QTHETA_CYCLOTOMIC_HPP

#include <algorithm>
#include <atomic>
#include <cctype>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qtheta/rational.hpp>

namespace qtheta
{

// Raised when the lcm of the orders met in a computation exceeds the
// configured maximum.
struct order_overflow : ::std::overflow_error {
    using ::std::overflow_error::overflow_error;
};

namespace detail
{

inline ::std::atomic<::std::uint32_t> &max_order_storage()
{
    static ::std::atomic<::std::uint32_t> value{400};
    return value;
}

inline ::std::uint32_t checked_lcm(::std::uint32_t a, ::std::uint32_t b)
{
    const auto l = static_cast<::std::uint64_t>(a) / ::std::gcd(a, b) * b;
    if (l > max_order_storage().load(::std::memory_order_relaxed)) {
        throw order_overflow("cyclotomic order " + ::std::to_string(l) + " exceeds the configured maximum "
                             + ::std::to_string(max_order_storage().load()));
    }
    return static_cast<::std::uint32_t>(l);
}

// Integer polynomial division by a monic divisor; the division must be exact.
inline ::std::vector<::std::int64_t> exact_divide_monic(::std::vector<::std::int64_t> num,
                                                       const ::std::vector<::std::int64_t> &den)
{
    const auto dn = den.size() - 1;
    ::std::vector<::std::int64_t> q(num.size() - dn, 0);
    for (auto i = num.size(); i-- > dn;) {
        const auto c = num[i];
        q[i - dn] = c;
        if (c == 0) {
            continue;
        }
        for (::std::size_t j = 0; j <= dn; ++j) {
            ::std::int64_t p;
            if (__builtin_mul_overflow(c, den[j], &p) || __builtin_sub_overflow(num[i - dn + j], p, &num[i - dn + j])) {
                throw ::std::overflow_error("cyclotomic polynomial coefficient overflow");
            }
        }
    }
    for (::std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) {
            throw ::std::logic_error("cyclotomic polynomial division is not exact");
        }
    }
    return q;
}

} // namespace detail

inline ::std::uint32_t max_cyclotomic_order()
{
    return detail::max_order_storage().load();
}

inline void set_max_cyclotomic_order(::std::uint32_t n)
{
    if (n == 0u) {
        throw ::std::invalid_argument("the maximum cyclotomic order must be positive");
    }
    detail::max_order_storage().store(n);
}

// Coefficients of Phi_n, ascending, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d.
// The table is shared process-wide; entries are written once.
inline const ::std::vector<::std::int64_t> &cyclotomic_polynomial(::std::uint32_t n)
{
    static ::std::shared_mutex mtx;
    static ::std::map<::std::uint32_t, ::std::vector<::std::int64_t>> table;

    if (n == 0u) {
        throw ::std::invalid_argument("cyclotomic_polynomial: order must be positive");
    }
    {
        ::std::shared_lock lock(mtx);
        if (auto it = table.find(n); it != table.end()) {
            return it->second;
        }
    }
    ::std::vector<::std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (::std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0u) {
            p = detail::exact_divide_monic(::std::move(p), cyclotomic_polynomial(d));
        }
    }
    ::std::unique_lock lock(mtx);
    return table.emplace(n, ::std::move(p)).first->second;
}

inline ::std::uint32_t euler_phi(::std::uint32_t n)
{
    return static_cast<::std::uint32_t>(cyclotomic_polynomial(n).size() - 1);
}

// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored as a sparse sum
// sum_k c_k zeta_N^k with 0 <= k < N (group ring Q[x]/(x^N - 1)). Distinct
// representations may denote the same field element: comparisons go through
// reduction modulo Phi_N.
class cyclotomic
{
public:
    using term = ::std::pair<::std::uint32_t, rational>;

private:
    ::std::uint32_t order_ = 1;
    ::std::vector<term> terms_;

    static ::std::uint32_t mod(::std::int64_t k, ::std::uint32_t n)
    {
        auto r = k % static_cast<::std::int64_t>(n);
        return static_cast<::std::uint32_t>(r < 0 ? r + n : r);
    }

    ::std::vector<rational> dense() const
    {
        ::std::vector<rational> d(order_);
        for (const auto &[k, c] : terms_) {
            d[k] = c;
        }
        return d;
    }

public:
    cyclotomic() = default;
    cyclotomic(rational c)
    {
        if (!c.is_zero()) {
            terms_.emplace_back(0u, ::std::move(c));
        }
    }
    template <::std::integral T>
    cyclotomic(T c) : cyclotomic(rational(c))
    {
    }

    // zeta_m^k.
    static cyclotomic root(::std::int64_t k, ::std::int64_t m)
    {
        if (m < 1) {
            throw ::std::invalid_argument("cyclotomic::root: order must be positive");
        }
        if (m > static_cast<::std::int64_t>(max_cyclotomic_order())) {
            throw order_overflow("cyclotomic::root: order " + ::std::to_string(m) + " exceeds the configured maximum");
        }
        cyclotomic r;
        r.order_ = static_cast<::std::uint32_t>(m);
        r.terms_.emplace_back(mod(k, r.order_), rational(1));
        return r;
    }

    // exp(2 pi i r), at the order given by the denominator of r.
    static cyclotomic unit(const rational &r)
    {
        return root(r.num(), r.den());
    }

    // Builds sum c_k zeta_n^k; exponents are reduced mod n, duplicates merged,
    // zeros dropped.
    static cyclotomic from_terms(::std::uint32_t n, const ::std::vector<::std::pair<::std::int64_t, rational>> &ts)
    {
        if (n == 0u) {
            throw ::std::invalid_argument("cyclotomic::from_terms: order must be positive");
        }
        ::std::vector<rational> d(n);
        for (const auto &[k, c] : ts) {
            d[mod(k, n)] += c;
        }
        return from_dense(n, ::std::move(d));
    }

    // Takes ownership of a dense coefficient vector of length n.
    static cyclotomic from_dense(::std::uint32_t n, ::std::vector<rational> &&d)
    {
        cyclotomic r;
        r.order_ = n;
        for (::std::uint32_t k = 0; k < d.size(); ++k) {
            if (!d[k].is_zero()) {
                r.terms_.emplace_back(k, ::std::move(d[k]));
            }
        }
        return r;
    }

    ::std::uint32_t order() const noexcept
    {
        return order_;
    }
    const ::std::vector<term> &terms() const noexcept
    {
        return terms_;
    }
    ::std::size_t size() const noexcept
    {
        return terms_.size();
    }
    // True when no coefficient is stored; is_zero() is the field-level test.
    bool empty() const noexcept
    {
        return terms_.empty();
    }

    // Rational value if the element is stored as a plain rational.
    ::std::optional<rational> as_rational() const
    {
        if (terms_.empty()) {
            return rational{};
        }
        if (terms_.size() == 1u && terms_[0].first == 0u) {
            return terms_[0].second;
        }
        return ::std::nullopt;
    }

    cyclotomic lifted(::std::uint32_t n) const
    {
        if (n % order_ != 0u) {
            throw ::std::invalid_argument("cyclotomic::lifted: target order " + ::std::to_string(n)
                                          + " is not a multiple of " + ::std::to_string(order_));
        }
        cyclotomic r;
        r.order_ = n;
        const auto f = n / order_;
        r.terms_.reserve(terms_.size());
        for (const auto &[k, c] : terms_) {
            r.terms_.emplace_back(k * f, c);
        }
        return r;
    }

    // Inverse of lifted(): succeeds iff m divides the order and every stored
    // exponent is a multiple of order / m.
    ::std::optional<cyclotomic> projected(::std::uint32_t m) const
    {
        if (m == 0u || order_ % m != 0u) {
            return ::std::nullopt;
        }
        const auto f = order_ / m;
        cyclotomic r;
        r.order_ = m;
        for (const auto &[k, c] : terms_) {
            if (k % f != 0u) {
                return ::std::nullopt;
            }
            r.terms_.emplace_back(k / f, c);
        }
        return r;
    }

    // Canonical representative: the remainder modulo Phi_N, of degree < phi(N).
    cyclotomic reduced() const
    {
        const auto &phi = cyclotomic_polynomial(order_);
        const auto deg = phi.size() - 1;
        if (terms_.empty() || terms_.back().first < deg) {
            return *this;
        }
        auto d = dense();
        for (auto i = d.size(); i-- > deg;) {
            if (d[i].is_zero()) {
                continue;
            }
            const rational c = ::std::move(d[i]);
            d[i] = rational{};
            for (::std::size_t j = 0; j < deg; ++j) {
                if (phi[j] != 0) {
                    d[i - deg + j].add_mul(c, rational(-phi[j]));
                }
            }
        }
        return from_dense(order_, ::std::move(d));
    }

    // Whichever of this representation and the reduced one stores fewer terms.
    cyclotomic compact() const
    {
        auto r = reduced();
        return r.size() <= size() ? r : *this;
    }

    bool is_zero() const
    {
        if (terms_.empty()) {
            return true;
        }
        if (terms_.size() == 1u) {
            return false;
        }
        return reduced().empty();
    }

    cyclotomic scaled(const rational &q) const
    {
        if (q.is_zero()) {
            cyclotomic z;
            z.order_ = order_;
            return z;
        }
        cyclotomic r = *this;
        for (auto &t : r.terms_) {
            t.second *= q;
        }
        return r;
    }

    // Multiplies by zeta_N^k at the current order.
    cyclotomic times_root(::std::int64_t k) const
    {
        cyclotomic r;
        r.order_ = order_;
        r.terms_.reserve(terms_.size());
        const auto s = mod(k, order_);
        for (const auto &[e, c] : terms_) {
            r.terms_.emplace_back((e + s) % order_, c);
        }
        ::std::sort(r.terms_.begin(), r.terms_.end(), [](const term &a, const term &b) { return a.first < b.first; });
        return r;
    }

    // Complex conjugate, zeta^k -> zeta^(N-k).
    cyclotomic conj() const
    {
        cyclotomic r;
        r.order_ = order_;
        for (const auto &[k, c] : terms_) {
            r.terms_.emplace_back(k == 0u ? 0u : order_ - k, c);
        }
        ::std::sort(r.terms_.begin(), r.terms_.end(), [](const term &a, const term &b) { return a.first < b.first; });
        return r;
    }

    // Multiplicative inverse in Q(zeta_N) via the extended Euclidean algorithm
    // against Phi_N over Q[x].
    cyclotomic inverse() const;

    friend cyclotomic operator+(const cyclotomic &a, const cyclotomic &b)
    {
        const auto n = detail::checked_lcm(a.order_, b.order_);
        ::std::vector<rational> d(n);
        const auto fa = n / a.order_, fb = n / b.order_;
        for (const auto &[k, c] : a.terms_) {
            d[k * fa] += c;
        }
        for (const auto &[k, c] : b.terms_) {
            d[k * fb] += c;
        }
        return from_dense(n, ::std::move(d));
    }
    cyclotomic operator-() const
    {
        cyclotomic r = *this;
        for (auto &t : r.terms_) {
            t.second = -t.second;
        }
        return r;
    }
    friend cyclotomic operator-(const cyclotomic &a, const cyclotomic &b)
    {
        return a + (-b);
    }
    friend cyclotomic operator*(const cyclotomic &a, const cyclotomic &b)
    {
        const auto n = detail::checked_lcm(a.order_, b.order_);
        ::std::vector<rational> d(n);
        accumulate_product(d, n, a, b);
        return from_dense(n, ::std::move(d));
    }
    cyclotomic &operator+=(const cyclotomic &b)
    {
        return *this = *this + b;
    }
    cyclotomic &operator-=(const cyclotomic &b)
    {
        return *this = *this - b;
    }
    cyclotomic &operator*=(const cyclotomic &b)
    {
        return *this = *this * b;
    }
    friend cyclotomic operator/(const cyclotomic &a, const cyclotomic &b)
    {
        return a * b.inverse();
    }

    friend bool operator==(const cyclotomic &a, const cyclotomic &b)
    {
        return (a - b).is_zero();
    }

    // d[k] += (a * b)[k] for a dense accumulator of length n (n a common
    // multiple of both orders).
    static void accumulate_product(::std::vector<rational> &d, ::std::uint32_t n, const cyclotomic &a,
                                   const cyclotomic &b)
    {
        const auto fa = n / a.order_, fb = n / b.order_;
        for (const auto &[i, ci] : a.terms_) {
            const auto ei = i * fa;
            for (const auto &[j, cj] : b.terms_) {
                auto e = ei + j * fb;
                if (e >= n) {
                    e -= n;
                }
                d[e].add_mul(ci, cj);
            }
        }
    }

    template <typename Real>
    ::std::complex<Real> embed_as() const
    {
        const auto r = reduced();
        Real re = 0, im = 0;
        for (const auto &[k, c] : r.terms_) {
            // Angle 2 pi k / N folded to [-pi, pi] before evaluation.
            const Real ang = ::std::numbers::pi_v<Real> * (Real(2) * Real(k) - (2u * k > r.order_ ? Real(2 * r.order_) : Real(0)))
                             / Real(r.order_);
            const Real cv = static_cast<Real>(c.to_long_double());
            re += cv * ::std::cos(ang);
            im += cv * ::std::sin(ang);
        }
        return {re, im};
    }

    // Canonical text: signed sum of "c", "zetaN^k" and "c*zetaN^k" monomials.
    ::std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        ::std::string s;
        bool first = true;
        for (const auto &[k, c] : terms_) {
            const bool neg = c.sign() < 0;
            const rational a = neg ? -c : c;
            if (first) {
                s += neg ? "-" : "";
            } else {
                s += neg ? " - " : " + ";
            }
            first = false;
            if (k == 0u) {
                s += a.to_string();
            } else {
                if (!a.is_one()) {
                    s += a.to_string() + "*";
                }
                s += "zeta" + ::std::to_string(order_) + "^" + ::std::to_string(k);
            }
        }
        return s;
    }

    // Parses the scalar grammar: a signed sum of monomials "c", "zetaN[^k]"
    // or "c*zetaN[^k]" with c a rational literal; whitespace is ignored.
    static cyclotomic parse(::std::string_view text);

    friend ::std::ostream &operator<<(::std::ostream &os, const cyclotomic &c)
    {
        return os << c.to_string();
    }
};

namespace detail
{

using qpoly = ::std::vector<rational>;

inline void trim(qpoly &p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

// Returns (quotient, remainder) of a / b over Q[x]; b nonzero.
inline ::std::pair<qpoly, qpoly> divmod(qpoly a, const qpoly &b)
{
    trim(a);
    if (a.size() < b.size()) {
        return {{}, a};
    }
    qpoly q(a.size() - b.size() + 1);
    const rational lead = b.back();
    for (auto i = a.size(); i-- >= b.size();) {
        if (a[i].is_zero()) {
            continue;
        }
        const rational c = a[i] / lead;
        q[i - b.size() + 1] = c;
        for (::std::size_t j = 0; j < b.size(); ++j) {
            a[i - b.size() + 1 + j] -= c * b[j];
        }
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline qpoly sub_mul(const qpoly &a, const qpoly &q, const qpoly &b)
{
    qpoly r(::std::max(a.size(), q.empty() || b.empty() ? ::std::size_t(0) : q.size() + b.size() - 1));
    for (::std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i];
    }
    for (::std::size_t i = 0; i < q.size(); ++i) {
        for (::std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] -= q[i] * b[j];
        }
    }
    trim(r);
    return r;
}

} // namespace detail

inline cyclotomic cyclotomic::inverse() const
{
    const auto r = reduced();
    if (r.empty()) {
        throw ::std::domain_error("cyclotomic::inverse: zero element");
    }
    const auto &phi = cyclotomic_polynomial(order_);
    detail::qpoly r0(phi.begin(), phi.end()), r1;
    for (const auto &[k, c] : r.terms_) {
        r1.resize(::std::max<::std::size_t>(r1.size(), k + 1));
        r1[k] = c;
    }
    detail::qpoly s0, s1{rational(1)};
    while (r1.size() > 1u) {
        auto [q, rem] = detail::divmod(r0, r1);
        r0 = ::std::move(r1);
        r1 = ::std::move(rem);
        auto s2 = detail::sub_mul(s0, q, s1);
        s0 = ::std::move(s1);
        s1 = ::std::move(s2);
    }
    // r1 is now a nonzero constant since Phi_N is irreducible.
    ::std::vector<::std::pair<::std::int64_t, rational>> ts;
    for (::std::size_t k = 0; k < s1.size(); ++k) {
        if (!s1[k].is_zero()) {
            ts.emplace_back(static_cast<::std::int64_t>(k), s1[k] / r1[0]);
        }
    }
    return from_terms(order_, ts);
}

inline cyclotomic cyclotomic::parse(::std::string_view text)
{
    ::std::string s;
    for (char c : text) {
        if (!::std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    auto fail = [&](::std::size_t pos, const ::std::string &what) -> void {
        throw ::std::invalid_argument("invalid scalar '" + ::std::string(text) + "' at offset " + ::std::to_string(pos)
                                      + ": " + what);
    };
    if (s.empty()) {
        fail(0, "empty scalar");
    }
    auto read_uint = [&](::std::size_t &pos) {
        const auto start = pos;
        while (pos < s.size() && ::std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
        if (start == pos) {
            fail(pos, "expected digits");
        }
        return s.substr(start, pos - start);
    };
    struct mono {
        rational c;
        ::std::uint32_t n;
        ::std::int64_t k;
    };
    ::std::vector<mono> monos;
    ::std::uint32_t order = 1;
    ::std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else if (!first) {
            fail(pos, "expected '+' or '-'");
        }
        first = false;
        rational c(1);
        bool have_c = false;
        if (pos < s.size() && ::std::isdigit(static_cast<unsigned char>(s[pos]))) {
            auto num = read_uint(pos);
            ::std::string lit = num;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                lit += "/" + read_uint(pos);
            }
            c = rational::parse(lit);
            have_c = true;
        }
        ::std::uint32_t n = 1;
        ::std::int64_t k = 0;
        bool have_zeta = false;
        if (have_c && pos < s.size() && s[pos] == '*') {
            ++pos;
            if (s.compare(pos, 4, "zeta") != 0) {
                fail(pos, "expected 'zeta' after '*'");
            }
        }
        if (s.compare(pos, 4, "zeta") == 0) {
            pos += 4;
            const auto ns = read_uint(pos);
            n = static_cast<::std::uint32_t>(::std::stoul(ns));
            if (n == 0u) {
                fail(pos, "zeta order must be positive");
            }
            k = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                bool kneg = false;
                if (pos < s.size() && s[pos] == '-') {
                    kneg = true;
                    ++pos;
                }
                k = ::std::stoll(read_uint(pos));
                if (kneg) {
                    k = -k;
                }
            }
            have_zeta = true;
        }
        if (!have_c && !have_zeta) {
            fail(pos, "expected a rational or zetaN");
        }
        order = detail::checked_lcm(order, n);
        monos.push_back({neg ? -c : c, n, k});
    }
    ::std::vector<::std::pair<::std::int64_t, rational>> ts;
    for (auto &m : monos) {
        ts.emplace_back(m.k * static_cast<::std::int64_t>(order / m.n), ::std::move(m.c));
    }
    return from_terms(order, ts);
}

// Complex approximation with relative error below 10^-digits; long double
// bounds the attainable accuracy at about 18 digits.
inline ::std::complex<long double> cyclo_embed(const cyclotomic &a, unsigned digits = 18)
{
    if (digits == 0u) {
        throw ::std::invalid_argument("cyclo_embed: digits must be positive");
    }
    return a.embed_as<long double>();
}

} // namespace qtheta

#endif
