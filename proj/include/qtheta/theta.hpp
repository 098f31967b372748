// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_THETA_HPP
#define QTHETA_THETA_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <qtheta/cyclotomic.hpp>
#include <qtheta/puiseux.hpp>
#include <qtheta/rational.hpp>

namespace qtheta
{

// The characteristic [eps; eps'].
struct characteristic {
    rational eps;
    rational epsp;

    friend bool operator==(const characteristic &, const characteristic &) = default;
    friend ::std::strong_ordering operator<=>(const characteristic &a, const characteristic &b)
    {
        if (auto c = a.eps <=> b.eps; c != 0) {
            return c;
        }
        return a.epsp <=> b.epsp;
    }
    characteristic operator-() const
    {
        return {-eps, -epsp};
    }
    ::std::string to_string() const
    {
        return "[" + eps.to_string() + ";" + epsp.to_string() + "]";
    }
    friend ::std::ostream &operator<<(::std::ostream &os, const characteristic &c)
    {
        return os << c.to_string();
    }
};

// constant: zeta = 0, the series has no z-powers. function: symbolic zeta.
enum class theta_mode { constant, function };

namespace detail
{

// Integers n with (n + eps/2 + b)^2 <= bound, as [lo, hi]; empty if lo > hi.
inline ::std::pair<::std::int64_t, ::std::int64_t> n_range(const rational &shift, const rational &bound)
{
    if (bound.sign() < 0) {
        return {1, 0};
    }
    const long double r = ::std::sqrt(bound.to_long_double());
    const long double s = shift.to_long_double();
    auto lo = static_cast<::std::int64_t>(::std::floor(-r - s)) - 2;
    auto hi = static_cast<::std::int64_t>(::std::ceil(r - s)) + 2;
    auto inside = [&](::std::int64_t n) {
        const rational k = rational(n) + shift;
        return k * k <= bound;
    };
    while (lo <= hi && !inside(lo)) {
        ++lo;
    }
    while (hi >= lo && !inside(hi)) {
        --hi;
    }
    return {lo, hi};
}

// min over integers n of (n + s)^2, exactly.
inline rational min_square(const rational &s)
{
    const auto f = s.floor();
    const rational a = s - rational(f), b = rational(f + 1) - s;
    const rational m = min(a, b);
    return m * m;
}

} // namespace detail

// Series of theta[c](zeta + a + b tau) from the defining sum:
// sum_k exp(pi i k eps') exp(2 pi i k a) x^(k^2 + 2 b k) z^k, k = n + eps/2,
// keeping every term with x-exponent <= cutoff.
inline series theta_shifted_series(const characteristic &c, const rational &a, const rational &b, theta_mode mode,
                                   const rational &cutoff)
{
    const rational half = c.eps / rational(2);
    const auto [lo, hi] = detail::n_range(half + b, cutoff + b * b);
    ::std::vector<series::term> ts;
    for (auto n = lo; n <= hi; ++n) {
        const rational k = rational(n) + half;
        const rational xe = k * k + rational(2) * b * k;
        ts.emplace_back(exponent_pair{xe, mode == theta_mode::function ? k : rational(0)},
                        cyclotomic::unit(k * c.epsp / rational(2) + k * a));
    }
    const rational minx = detail::min_square(half + b) - b * b;
    return series::from_terms(cutoff, minx, ::std::move(ts));
}

// theta[eps; eps'](zeta, tau): sum_n exp(pi i (n + eps/2) eps') x^((n + eps/2)^2) z^(n + eps/2).
inline series theta_series(const characteristic &c, theta_mode mode, const rational &cutoff)
{
    if (cutoff.sign() < 0) {
        throw ::std::invalid_argument("theta_series: cutoff must be nonnegative");
    }
    return theta_shifted_series(c, rational(0), rational(0), mode, cutoff);
}

// d/dzeta theta / (2 pi i): coefficients exp(pi i k eps') k.
inline series theta_deriv_series(const characteristic &c, const rational &cutoff,
                                 theta_mode mode = theta_mode::function)
{
    if (cutoff.sign() < 0) {
        throw ::std::invalid_argument("theta_deriv_series: cutoff must be nonnegative");
    }
    const rational half = c.eps / rational(2);
    const auto [lo, hi] = detail::n_range(half, cutoff);
    ::std::vector<series::term> ts;
    for (auto n = lo; n <= hi; ++n) {
        const rational k = rational(n) + half;
        if (k.is_zero()) {
            continue;
        }
        ts.emplace_back(exponent_pair{k * k, mode == theta_mode::function ? k : rational(0)},
                        cyclotomic::unit(k * c.epsp / rational(2)).scaled(k));
    }
    return series::from_terms(cutoff, detail::min_square(half), ::std::move(ts));
}

// Jacobi triple product:
// exp(pi i eps eps'/2) x^(eps^2/4) z^(eps/2)
//   prod_{n>=1} (1 - x^(2n)) (1 + e^(pi i eps') x^(2n-1+eps) z) (1 + e^(-pi i eps') x^(2n-1-eps) / z).
inline series theta_product_series(const characteristic &c, theta_mode mode, const rational &cutoff)
{
    if (cutoff.sign() < 0) {
        throw ::std::invalid_argument("theta_product_series: cutoff must be nonnegative");
    }
    if (c.eps.sign() < 0 || c.eps >= rational(2)) {
        throw ::std::invalid_argument("theta_product_series: eps must lie in [0, 2); reduce the characteristic first");
    }
    const bool fn = mode == theta_mode::function;
    const rational lead = c.eps * c.eps / rational(4);
    const rational target = cutoff - lead;
    series prod = series::one(target);
    if (target.sign() >= 0) {
        // Factor polynomials are exact; only the single factor with exponent
        // 1 - eps can be non-positive, so a headroom of 2 keeps the partial
        // products exact through target.
        const rational room = target + rational(2);
        prod = series::one(room);
        const cyclotomic a = cyclotomic::unit(c.epsp / rational(2));
        const cyclotomic ainv = cyclotomic::unit(-c.epsp / rational(2));
        const rational lowest = min(rational(0), rational(1) - c.eps);
        auto binomial = [&](const rational &e, const rational &ze, const cyclotomic &coef) {
            return series::from_terms(room, min(rational(0), e),
                                      {{{rational(0), rational(0)}, cyclotomic(1)}, {{e, fn ? ze : rational(0)}, coef}});
        };
        // The omitted tail is 1 + O(x^(2n-1-eps)) for the first omitted n; it
        // cannot reach target once 2n - 1 - eps > target - lowest. One guard
        // factor beyond that.
        ::std::int64_t last = 1;
        while (rational(2 * last + 1) - c.eps <= target - lowest) {
            ++last;
        }
        ++last;
        for (::std::int64_t n = 1; n <= last; ++n) {
            prod = prod * binomial(rational(2 * n), rational(0), cyclotomic(-1));
            prod = prod * binomial(rational(2 * n - 1) + c.eps, rational(1), a);
            prod = prod * binomial(rational(2 * n - 1) - c.eps, rational(-1), ainv);
            if (prod.cutoff() < target) {
                throw ::std::logic_error("theta_product_series: lost exactness");
            }
        }
        prod = prod.truncated(target);
    }
    return prod.shifted(lead, fn ? c.eps / rational(2) : rational(0))
        .scaled(cyclotomic::unit(c.eps * c.epsp / rational(4)));
}

// theta[eps + 2m; eps' + 2n] = exp(pi i eps n) theta[eps; eps']: returns the
// representative with both entries in [0, 2) and the scalar mu with
// theta[c] = mu theta[c0].
inline ::std::pair<characteristic, cyclotomic> reduce_char(const characteristic &c)
{
    const auto m = (c.eps / rational(2)).floor();
    const auto n = (c.epsp / rational(2)).floor();
    characteristic c0{c.eps - rational(2 * m), c.epsp - rational(2 * n)};
    auto mu = cyclotomic::unit(c0.eps * rational(n) / rational(2));
    return {::std::move(c0), ::std::move(mu)};
}

// theta[c](zeta + n + m tau).
inline series shift_integer(const characteristic &c, ::std::int64_t m, ::std::int64_t n, const rational &cutoff)
{
    return theta_shifted_series(c, rational(n), rational(m), theta_mode::function, cutoff);
}

// theta[c](zeta + (n + m tau)/2).
inline series shift_half_period(const characteristic &c, ::std::int64_t m, ::std::int64_t n, const rational &cutoff)
{
    return theta_shifted_series(c, rational(n, 2), rational(m, 2), theta_mode::function, cutoff);
}

// The zero (1 - eps)/2 tau + (1 - eps')/2 as (tau coefficient, constant).
inline ::std::pair<rational, rational> theta_zero_point(const characteristic &c)
{
    return {(rational(1) - c.eps) / rational(2), (rational(1) - c.epsp) / rational(2)};
}

// Process-wide memo of theta_series / theta_deriv_series keyed by
// (characteristic, mode, cutoff, derivative flag).
class theta_cache
{
    using key = ::std::tuple<characteristic, int, rational, bool>;
    mutable ::std::shared_mutex mtx_;
    ::std::map<key, ::std::shared_ptr<const series>> table_;

    template <typename F>
    ::std::shared_ptr<const series> get(key k, F &&make)
    {
        {
            ::std::shared_lock lock(mtx_);
            if (auto it = table_.find(k); it != table_.end()) {
                return it->second;
            }
        }
        auto s = ::std::make_shared<const series>(make());
        ::std::unique_lock lock(mtx_);
        return table_.emplace(::std::move(k), ::std::move(s)).first->second;
    }

public:
    static theta_cache &global()
    {
        static theta_cache c;
        return c;
    }

    ::std::shared_ptr<const series> value(const characteristic &c, theta_mode mode, const rational &cutoff)
    {
        return get(key{c, static_cast<int>(mode), cutoff, false}, [&] { return theta_series(c, mode, cutoff); });
    }
    ::std::shared_ptr<const series> derivative(const characteristic &c, theta_mode mode, const rational &cutoff)
    {
        return get(key{c, static_cast<int>(mode), cutoff, true}, [&] { return theta_deriv_series(c, cutoff, mode); });
    }
    ::std::size_t size() const
    {
        ::std::shared_lock lock(mtx_);
        return table_.size();
    }
    void clear()
    {
        ::std::unique_lock lock(mtx_);
        table_.clear();
    }
};

} // namespace qtheta

#endif
