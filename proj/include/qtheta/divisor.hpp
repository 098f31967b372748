// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_DIVISOR_HPP
#define QTHETA_DIVISOR_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qtheta
{

namespace detail
{

template <typename F>
void for_each_divisor(::std::int64_t n, F &&f)
{
    if (n < 1) {
        throw ::std::domain_error("divisor functions need n >= 1");
    }
    for (::std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            f(d);
            if (d != n / d) {
                f(n / d);
            }
        }
    }
}

} // namespace detail

// Sum of the positive divisors of n.
inline ::std::int64_t sigma(::std::int64_t n)
{
    ::std::int64_t s = 0;
    detail::for_each_divisor(n, [&](::std::int64_t d) { s += d; });
    return s;
}

// (#divisors = 1 mod 3) - (#divisors = 2 mod 3).
inline ::std::int64_t delta(::std::int64_t n)
{
    ::std::int64_t s = 0;
    detail::for_each_divisor(n, [&](::std::int64_t d) {
        if (d % 3 == 1) {
            ++s;
        } else if (d % 3 == 2) {
            --s;
        }
    });
    return s;
}

struct arith_report {
    ::std::int64_t n_max = 0;
    ::std::vector<::std::int64_t> failures;

    bool passed() const
    {
        return failures.empty();
    }
};

// Checks sigma(3n + 2) = 3 sum_{k=0}^{n} delta(3k + 1) delta(3(n - k) + 1) for 0 <= n <= n_max.
inline arith_report verify_sigma_convolution(::std::int64_t n_max)
{
    if (n_max < 0) {
        throw ::std::domain_error("verify_sigma_convolution: n_max must be nonnegative");
    }
    ::std::vector<::std::int64_t> d(static_cast<::std::size_t>(n_max) + 1);
    for (::std::int64_t k = 0; k <= n_max; ++k) {
        d[static_cast<::std::size_t>(k)] = delta(3 * k + 1);
    }
    arith_report r;
    r.n_max = n_max;
    for (::std::int64_t n = 0; n <= n_max; ++n) {
        ::std::int64_t s = 0;
        for (::std::int64_t k = 0; k <= n; ++k) {
            s += d[static_cast<::std::size_t>(k)] * d[static_cast<::std::size_t>(n - k)];
        }
        if (sigma(3 * n + 2) != 3 * s) {
            r.failures.push_back(n);
        }
    }
    return r;
}

} // namespace qtheta

#endif
