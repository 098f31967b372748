// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_PUISEUX_HPP
#define QTHETA_PUISEUX_HPP

#include <algorithm>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qtheta/cyclotomic.hpp>
#include <qtheta/rational.hpp>

namespace qtheta
{

// A truncation too low to guarantee an exact coefficient.
struct precision_error : ::std::runtime_error {
    using ::std::runtime_error::runtime_error;
};

// Exponent of x^a z^b.
struct exponent_pair {
    rational x;
    rational z;

    friend bool operator==(const exponent_pair &, const exponent_pair &) = default;
    friend ::std::strong_ordering operator<=>(const exponent_pair &a, const exponent_pair &b)
    {
        if (auto c = a.x <=> b.x; c != 0) {
            return c;
        }
        return a.z <=> b.z;
    }
    friend exponent_pair operator+(const exponent_pair &a, const exponent_pair &b)
    {
        return {a.x + b.x, a.z + b.z};
    }
};

// Truncated series sum c_{a,b} x^a z^b over rational exponents, exact for
// every a <= cutoff. minx is a lower bound on the x-exponents of the
// untruncated series; it makes product truncation sound.
class series
{
public:
    using term = ::std::pair<exponent_pair, cyclotomic>;

private:
    rational cutoff_;
    rational minx_;
    ::std::vector<term> terms_;

    static ::std::uint32_t common_order(const ::std::vector<term> &a, const ::std::vector<term> &b)
    {
        ::std::uint32_t n = 1;
        for (const auto &t : a) {
            n = detail::checked_lcm(n, t.second.order());
        }
        for (const auto &t : b) {
            n = detail::checked_lcm(n, t.second.order());
        }
        return n;
    }

    static void sort_terms(::std::vector<term> &ts)
    {
        ::std::sort(ts.begin(), ts.end(), [](const term &a, const term &b) { return a.first < b.first; });
    }

public:
    // The zero series, exact to the given cutoff.
    explicit series(rational cutoff = rational(0)) : cutoff_(cutoff), minx_(::std::move(cutoff)) {}

    // Merges duplicate exponents, drops zero coefficients and everything
    // above the cutoff.
    static series from_terms(rational cutoff, rational minx, ::std::vector<term> ts)
    {
        series s(::std::move(cutoff));
        s.minx_ = ::std::move(minx);
        ts.erase(::std::remove_if(ts.begin(), ts.end(), [&](const term &t) { return t.first.x > s.cutoff_; }),
                 ts.end());
        for (const auto &t : ts) {
            if (t.first.x < s.minx_) {
                throw ::std::invalid_argument("series::from_terms: term below the declared minimum x-exponent");
            }
        }
        sort_terms(ts);
        for (auto &t : ts) {
            if (!s.terms_.empty() && s.terms_.back().first == t.first) {
                s.terms_.back().second += t.second;
            } else {
                s.terms_.push_back(::std::move(t));
            }
        }
        ::std::vector<term> kept;
        kept.reserve(s.terms_.size());
        for (auto &t : s.terms_) {
            if (!t.second.is_zero()) {
                kept.emplace_back(::std::move(t.first), t.second.compact());
            }
        }
        s.terms_ = ::std::move(kept);
        return s;
    }

    // c x^a z^b; the untruncated series is this single term.
    static series monomial(const rational &a, const rational &b, const cyclotomic &c, rational cutoff)
    {
        return from_terms(::std::move(cutoff), a, {{{a, b}, c}});
    }

    static series one(rational cutoff)
    {
        return monomial(rational(0), rational(0), cyclotomic(1), ::std::move(cutoff));
    }

    const rational &cutoff() const noexcept
    {
        return cutoff_;
    }
    const rational &minx() const noexcept
    {
        return minx_;
    }
    const ::std::vector<term> &terms() const noexcept
    {
        return terms_;
    }
    ::std::size_t size() const noexcept
    {
        return terms_.size();
    }

    // Every stored coefficient is nonzero, so this is the field-level test.
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    cyclotomic coeff(const exponent_pair &e) const
    {
        if (e.x > cutoff_) {
            throw ::std::out_of_range("series::coeff: x-exponent " + e.x.to_string() + " is beyond the cutoff "
                                      + cutoff_.to_string());
        }
        auto it = ::std::lower_bound(terms_.begin(), terms_.end(), e,
                                     [](const term &t, const exponent_pair &k) { return t.first < k; });
        if (it != terms_.end() && it->first == e) {
            return it->second;
        }
        return cyclotomic();
    }

    series truncated(const rational &c) const
    {
        if (c > cutoff_) {
            throw precision_error("series::truncated: cannot raise the cutoff from " + cutoff_.to_string() + " to "
                                  + c.to_string());
        }
        series r(c);
        r.minx_ = minx_;
        for (const auto &t : terms_) {
            if (t.first.x > c) {
                break;
            }
            r.terms_.push_back(t);
        }
        return r;
    }

    friend series operator+(const series &a, const series &b)
    {
        series r(min(a.cutoff_, b.cutoff_));
        r.minx_ = min(a.minx_, b.minx_);
        auto i = a.terms_.begin(), j = b.terms_.begin();
        const auto push = [&](const term &t) {
            if (t.first.x <= r.cutoff_) {
                r.terms_.push_back(t);
            }
        };
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                push(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                push(*j++);
            } else {
                if (i->first.x <= r.cutoff_) {
                    auto c = i->second + j->second;
                    if (!c.is_zero()) {
                        r.terms_.emplace_back(i->first, c.compact());
                    }
                }
                ++i;
                ++j;
            }
        }
        return r;
    }
    series operator-() const
    {
        series r = *this;
        for (auto &t : r.terms_) {
            t.second = -t.second;
        }
        return r;
    }
    friend series operator-(const series &a, const series &b)
    {
        return a + (-b);
    }

    series scaled(const cyclotomic &c) const
    {
        series r(cutoff_);
        r.minx_ = minx_;
        if (c.is_zero()) {
            return r;
        }
        for (const auto &t : terms_) {
            r.terms_.emplace_back(t.first, t.second * c);
        }
        return r;
    }

    // Cutoff of the product that keeps every retained coefficient exact.
    static rational product_cutoff(const series &a, const series &b)
    {
        return min(min(a.cutoff_ + b.minx_, b.cutoff_ + a.minx_), min(a.cutoff_, b.cutoff_));
    }

private:
    // Every coefficient an integer below 2^40 in absolute value: products
    // then fit comfortably in int128 accumulators.
    static bool small_integral(const ::std::vector<term> &ts)
    {
        constexpr ::std::int64_t bound = ::std::int64_t{1} << 40;
        for (const auto &t : ts) {
            for (const auto &[k, q] : t.second.terms()) {
                if (!q.is_small() || q.den() != 1 || q.num() >= bound || q.num() <= -bound) {
                    return false;
                }
            }
        }
        return true;
    }

    using int_coeffs = ::std::vector<::std::pair<::std::uint32_t, ::std::int64_t>>;

    static ::std::vector<int_coeffs> lift_integral(const ::std::vector<term> &ts, ::std::uint32_t n)
    {
        ::std::vector<int_coeffs> out;
        out.reserve(ts.size());
        for (const auto &t : ts) {
            const auto f = n / t.second.order();
            int_coeffs v;
            for (const auto &[k, q] : t.second.terms()) {
                v.emplace_back(k * f, q.num());
            }
            out.push_back(::std::move(v));
        }
        return out;
    }

    static series multiply_integral(const series &a, const series &b, const rational &c, ::std::uint32_t n, series r)
    {
        const auto la = lift_integral(a.terms_, n), lb = lift_integral(b.terms_, n);
        ::std::map<exponent_pair, ::std::vector<detail::int128>> acc;
        for (::std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto &ea = a.terms_[i].first;
            if (ea.x + b.terms_.front().first.x > c) {
                break;
            }
            for (::std::size_t j = 0; j < b.terms_.size(); ++j) {
                auto e = ea + b.terms_[j].first;
                if (e.x > c) {
                    break;
                }
                auto &d = acc[::std::move(e)];
                if (d.empty()) {
                    d.resize(n);
                }
                for (const auto &[ki, vi] : la[i]) {
                    for (const auto &[kj, vj] : lb[j]) {
                        auto k = ki + kj;
                        if (k >= n) {
                            k -= n;
                        }
                        d[k] += static_cast<detail::int128>(vi) * vj;
                    }
                }
            }
        }
        r.terms_.reserve(acc.size());
        for (auto &[e, d] : acc) {
            ::std::vector<rational> q(n);
            bool any = false;
            for (::std::uint32_t k = 0; k < n; ++k) {
                if (d[k] != 0) {
                    q[k] = rational::from_integer(d[k]);
                    any = true;
                }
            }
            if (!any) {
                continue;
            }
            auto v = cyclotomic::from_dense(n, ::std::move(q));
            if (!v.is_zero()) {
                r.terms_.emplace_back(e, v.compact());
            }
        }
        return r;
    }

public:
    friend series operator*(const series &a, const series &b)
    {
        const rational c = product_cutoff(a, b);
        series r(c);
        r.minx_ = a.minx_ + b.minx_;
        if (a.terms_.empty() || b.terms_.empty()) {
            return r;
        }
        const auto n = common_order(a.terms_, b.terms_);
        if (small_integral(a.terms_) && small_integral(b.terms_)) {
            return multiply_integral(a, b, c, n, ::std::move(r));
        }
        ::std::map<exponent_pair, ::std::vector<rational>> acc;
        for (const auto &[ea, ca] : a.terms_) {
            if (ea.x + b.terms_.front().first.x > c) {
                break;
            }
            for (const auto &[eb, cb] : b.terms_) {
                auto e = ea + eb;
                if (e.x > c) {
                    break;
                }
                auto &d = acc[::std::move(e)];
                if (d.empty()) {
                    d.resize(n);
                }
                cyclotomic::accumulate_product(d, n, ca, cb);
            }
        }
        r.terms_.reserve(acc.size());
        for (auto &[e, d] : acc) {
            auto v = cyclotomic::from_dense(n, ::std::move(d));
            if (!v.is_zero()) {
                r.terms_.emplace_back(e, v.compact());
            }
        }
        return r;
    }

    // Product truncated at target; throws precision_error if the inputs do
    // not determine the product exactly up to target.
    friend series multiply_to(const series &a, const series &b, const rational &target)
    {
        if (product_cutoff(a, b) < target) {
            throw precision_error("series product is exact only up to x^" + product_cutoff(a, b).to_string()
                                  + ", below the requested " + target.to_string());
        }
        return (a * b).truncated(target);
    }

    friend series pow(const series &a, unsigned p)
    {
        if (p == 0u) {
            throw ::std::invalid_argument("series pow: exponent must be positive");
        }
        series base = a;
        ::std::optional<series> r;
        for (;;) {
            if (p & 1u) {
                r = r ? *r * base : base;
            }
            p >>= 1u;
            if (p == 0u) {
                break;
            }
            base = base * base;
        }
        return *r;
    }

    // Multiplies by x^a z^b.
    series shifted(const rational &a, const rational &b) const
    {
        series r(cutoff_ + a);
        r.minx_ = minx_ + a;
        r.terms_.reserve(terms_.size());
        for (const auto &t : terms_) {
            r.terms_.emplace_back(exponent_pair{t.first.x + a, t.first.z + b}, t.second);
        }
        return r;
    }

    // z -> 1/z.
    series z_inverted() const
    {
        series r(cutoff_);
        r.minx_ = minx_;
        for (const auto &t : terms_) {
            r.terms_.emplace_back(exponent_pair{t.first.x, -t.first.z}, t.second);
        }
        sort_terms(r.terms_);
        return r;
    }

    // z -> 1.
    series at_z_one() const
    {
        ::std::vector<term> ts;
        ts.reserve(terms_.size());
        for (const auto &t : terms_) {
            ts.emplace_back(exponent_pair{t.first.x, rational(0)}, t.second);
        }
        return from_terms(cutoff_, minx_, ::std::move(ts));
    }

    // Numerical value at x = exp(pi i tau), z = exp(2 pi i zeta).
    template <typename Real>
    ::std::complex<Real> evaluate(const ::std::complex<Real> &tau, const ::std::complex<Real> &zeta = {}) const
    {
        const ::std::complex<Real> i_pi(0, ::std::numbers::pi_v<Real>);
        ::std::complex<Real> s = 0;
        for (const auto &[e, c] : terms_) {
            const auto w = ::std::exp(i_pi * (tau * Real(e.x.to_long_double()) + Real(2) * zeta * Real(e.z.to_long_double())));
            s += c.template embed_as<Real>() * w;
        }
        return s;
    }

    // One term per line: "xExp zExp coefficient", canonical order.
    ::std::string serialize() const
    {
        ::std::string s;
        for (const auto &[e, c] : terms_) {
            s += e.x.to_fraction_string() + " " + e.z.to_fraction_string() + " " + c.to_string() + "\n";
        }
        return s;
    }

    // Human-readable sum, e.g. "1 + 2 x^1 + 2 x^4" or "zeta100^1 x^{1/100}".
    ::std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        auto power = [](const char *v, const rational &q) {
            if (q.is_zero()) {
                return ::std::string();
            }
            ::std::string s = " ";
            s += v;
            s += "^";
            if (q.is_integer() && q.sign() > 0) {
                return s + q.to_string();
            }
            return s + "{" + q.to_string() + "}";
        };
        ::std::string out;
        bool first = true;
        for (const auto &[e, c] : terms_) {
            const auto mono = power("x", e.x) + power("z", e.z);
            auto cs = c.to_string();
            bool neg = false;
            const bool single = c.size() == 1u;
            if (single && cs.front() == '-') {
                neg = true;
                cs.erase(0, 1);
            }
            if (!single) {
                cs = "(" + cs + ")";
            }
            ::std::string body;
            if (cs == "1" && !mono.empty()) {
                body = mono.substr(1);
            } else {
                body = cs + mono;
            }
            if (first) {
                out += (neg ? "-" : "") + body;
            } else {
                out += (neg ? " - " : " + ") + body;
            }
            first = false;
        }
        return out;
    }

    friend ::std::ostream &operator<<(::std::ostream &os, const series &s)
    {
        return os << s.to_string();
    }
};

// Structural equality of retained terms at a common cutoff.
inline bool same_terms(const series &a, const series &b)
{
    const auto c = min(a.cutoff(), b.cutoff());
    return (a.truncated(c) - b.truncated(c)).is_zero();
}

} // namespace qtheta

#endif
