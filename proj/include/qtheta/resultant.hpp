// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_RESULTANT_HPP
#define QTHETA_RESULTANT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <qtheta/cyclotomic.hpp>
#include <qtheta/numeric.hpp>

namespace qtheta
{

template <typename T>
struct ring_traits {
    static bool is_zero(const T &v)
    {
        return v.is_zero();
    }
    static constexpr bool inexact = false;
};

template <typename R>
struct ring_traits<::std::complex<R>> {
    static bool is_zero(const ::std::complex<R> &v)
    {
        return v == ::std::complex<R>(0);
    }
    static constexpr bool inexact = true;
};

template <>
struct ring_traits<double> {
    static bool is_zero(double v)
    {
        return v == 0.0;
    }
    static constexpr bool inexact = true;
};

// Coefficients from degree 0 upward; the zero polynomial is empty.
template <typename T>
class poly
{
    ::std::vector<T> c_;

    void trim()
    {
        while (!c_.empty() && ring_traits<T>::is_zero(c_.back())) {
            c_.pop_back();
        }
    }

public:
    poly() = default;
    explicit poly(::std::vector<T> ascending) : c_(::std::move(ascending))
    {
        trim();
    }
    // a_0 x^n + a_1 x^(n-1) + ... + a_n, leading coefficient first.
    static poly from_leading(::std::vector<T> descending)
    {
        ::std::reverse(descending.begin(), descending.end());
        return poly(::std::move(descending));
    }
    // Product of (x - r) over the roots.
    static poly from_roots(const ::std::vector<T> &roots)
    {
        poly p(::std::vector<T>{T(1)});
        for (const auto &r : roots) {
            p = p * poly(::std::vector<T>{-r, T(1)});
        }
        return p;
    }

    const ::std::vector<T> &coefficients() const noexcept
    {
        return c_;
    }
    bool is_zero() const noexcept
    {
        return c_.empty();
    }
    int degree() const noexcept
    {
        return static_cast<int>(c_.size()) - 1;
    }
    const T &operator[](::std::size_t k) const
    {
        return c_.at(k);
    }
    T operator()(const T &x) const
    {
        T v(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            v = v * x + *it;
        }
        return v;
    }
    friend poly operator*(const poly &a, const poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        ::std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (::std::size_t i = 0; i < a.c_.size(); ++i) {
            for (::std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return poly(::std::move(r));
    }
};

template <typename T>
using matrix = ::std::vector<::std::vector<T>>;

// The (m+n) x (m+n) Sylvester matrix: m shifted rows of f's coefficients,
// leading coefficient first, then n shifted rows of g's.
template <typename T>
matrix<T> sylvester_matrix(const poly<T> &f, const poly<T> &g)
{
    if (f.is_zero() || g.is_zero()) {
        throw ::std::invalid_argument("sylvester_matrix: zero polynomial");
    }
    const int n = f.degree(), m = g.degree();
    if (n < 1 || m < 1) {
        throw ::std::invalid_argument("sylvester_matrix: degrees must be at least 1");
    }
    const auto size = static_cast<::std::size_t>(n + m);
    matrix<T> s(size, ::std::vector<T>(size, T(0)));
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= n; ++k) {
            s[static_cast<::std::size_t>(r)][static_cast<::std::size_t>(r + k)] = f[static_cast<::std::size_t>(n - k)];
        }
    }
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k <= m; ++k) {
            s[static_cast<::std::size_t>(m + r)][static_cast<::std::size_t>(r + k)] = g[static_cast<::std::size_t>(m - k)];
        }
    }
    return s;
}

// Fraction-free (Bareiss) determinant. Exact types pivot on the first nonzero
// entry, floating types on the largest.
template <typename T>
T determinant(matrix<T> a)
{
    const auto n = a.size();
    if (n == 0u) {
        return T(1);
    }
    bool negate = false;
    T prev(1);
    for (::std::size_t k = 0; k + 1 < n; ++k) {
        ::std::size_t piv = k;
        if constexpr (ring_traits<T>::inexact) {
            for (::std::size_t i = k + 1; i < n; ++i) {
                if (::std::abs(a[i][k]) > ::std::abs(a[piv][k])) {
                    piv = i;
                }
            }
        } else {
            while (piv < n && ring_traits<T>::is_zero(a[piv][k])) {
                ++piv;
            }
        }
        if (piv == n || ring_traits<T>::is_zero(a[piv][k])) {
            return T(0);
        }
        if (piv != k) {
            ::std::swap(a[piv], a[k]);
            negate = !negate;
        }
        for (::std::size_t i = k + 1; i < n; ++i) {
            for (::std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                if constexpr (requires(T & v) { v.compact(); }) {
                    a[i][j] = a[i][j].compact();
                }
            }
            a[i][k] = T(0);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

template <typename T>
T resultant(const poly<T> &f, const poly<T> &g)
{
    return determinant(sylvester_matrix(f, g));
}

// Closed form for two quadratics a0 x^2 + a1 x + a2 and b0 x^2 + b1 x + b2:
// (a0 b2 - a2 b0)^2 - (a0 b1 - a1 b0)(a1 b2 - a2 b1).
template <typename T>
T resultant_2x2(const poly<T> &f, const poly<T> &g)
{
    if (f.degree() != 2 || g.degree() != 2) {
        throw ::std::invalid_argument("resultant_2x2: both polynomials must have degree 2");
    }
    const T &a0 = f[2], &a1 = f[1], &a2 = f[0];
    const T &b0 = g[2], &b1 = g[1], &b2 = g[0];
    const T u = a0 * b2 - a2 * b0;
    return u * u - (a0 * b1 - a1 * b0) * (a1 * b2 - a2 * b1);
}

// Largest coefficient magnitude of f and g.
template <typename R>
R coefficient_scale(const poly<::std::complex<R>> &f, const poly<::std::complex<R>> &g)
{
    R s = 0;
    for (const auto &c : f.coefficients()) {
        s = ::std::max(s, ::std::abs(c));
    }
    for (const auto &c : g.coefficients()) {
        s = ::std::max(s, ::std::abs(c));
    }
    return s;
}

// Two quadratics satisfied by x = theta[1;1/5]/theta[1;3/5], from the
// two-theta relations with squared factors theta[1/5;1](z) and theta[1/5;7/5](w):
//   f = T[1/5;3/5] T[1/5;7/5] x^2 - T[1/5;1]^2 x - T[1/5;1/5] T[1/5;9/5]        at z
//   g = z5^2 T[1/5;1] T[1/5;9/5] x^2 - z5^2 T[1/5;7/5]^2 x + T[1/5;1/5] T[1/5;3/5] at w
inline ::std::pair<poly<::std::complex<double>>, poly<::std::complex<double>>>
theta_quadratics(::std::complex<double> tau, ::std::complex<double> z = 0, ::std::complex<double> w = 0,
                 const eval_config &cfg = {})
{
    auto t = [&](::std::int64_t k, ::std::complex<double> at) {
        return theta_eval<double>({rational(1, 5), rational(k, 5)}, at, tau, cfg).value;
    };
    const auto z5sq = cyclotomic::root(2, 5).embed_as<double>();
    poly<::std::complex<double>> f(::std::vector<::std::complex<double>>{
        -t(1, z) * t(9, z), -t(5, z) * t(5, z), t(3, z) * t(7, z)});
    poly<::std::complex<double>> g(::std::vector<::std::complex<double>>{
        t(1, w) * t(3, w), -z5sq * t(7, w) * t(7, w), z5sq * t(5, w) * t(9, w)});
    return {::std::move(f), ::std::move(g)};
}

// The common root theta[1;1/5]/theta[1;3/5] at tau.
inline ::std::complex<double> theta_quadratics_root(::std::complex<double> tau, const eval_config &cfg = {})
{
    return theta_eval<double>({rational(1), rational(1, 5)}, 0, tau, cfg).value
           / theta_eval<double>({rational(1), rational(3, 5)}, 0, tau, cfg).value;
}

} // namespace qtheta

#endif
