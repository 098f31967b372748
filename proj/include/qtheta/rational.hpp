// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_RATIONAL_HPP
#define QTHETA_RATIONAL_HPP

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtheta
{

namespace detail
{

__extension__ using int128 = __int128;
__extension__ using uint128 = unsigned __int128;

inline uint128 gcd128(uint128 a, uint128 b)
{
    if ((a >> 64) == 0u && (b >> 64) == 0u) {
        return ::std::gcd(static_cast<::std::uint64_t>(a), static_cast<::std::uint64_t>(b));
    }
    while (b != 0u) {
        const auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool fits_int64(int128 v)
{
    return v >= static_cast<int128>(INT64_MIN) && v <= static_cast<int128>(INT64_MAX);
}

inline mpz_class mpz_from_int128(int128 v)
{
    const bool neg = v < 0;
    uint128 u = neg ? static_cast<uint128>(-(v + 1)) + 1u : static_cast<uint128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<::std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<::std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

} // namespace detail

// Exact rational number in canonical form (coprime, positive denominator,
// zero is 0/1). Values that fit in int64 numerator/denominator use a fast
// path; everything else falls back to GMP.
class rational
{
    ::std::int64_t num_ = 0;
    ::std::int64_t den_ = 1;
    ::std::unique_ptr<mpq_class> big_;

    static rational from_mpq(mpq_class q)
    {
        q.canonicalize();
        rational r;
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            r.num_ = q.get_num().get_si();
            r.den_ = q.get_den().get_si();
        } else {
            r.big_ = ::std::make_unique<mpq_class>(::std::move(q));
        }
        return r;
    }

    // n/d with d > 0, not necessarily reduced.
    static rational from_int128(detail::int128 n, detail::int128 d)
    {
        if (n == 0) {
            return rational{};
        }
        const auto un = static_cast<detail::uint128>(n < 0 ? -n : n);
        const auto g = static_cast<detail::int128>(detail::gcd128(un, static_cast<detail::uint128>(d)));
        n /= g;
        d /= g;
        if (detail::fits_int64(n) && detail::fits_int64(d)) {
            rational r;
            r.num_ = static_cast<::std::int64_t>(n);
            r.den_ = static_cast<::std::int64_t>(d);
            return r;
        }
        return from_mpq(mpq_class(detail::mpz_from_int128(n), detail::mpz_from_int128(d)));
    }

public:
    rational() = default;
    static rational from_integer(detail::int128 n)
    {
        return from_int128(n, 1);
    }
    template <::std::integral T>
    rational(T n) : num_(static_cast<::std::int64_t>(n))
    {
        if constexpr (sizeof(T) >= sizeof(::std::int64_t) && ::std::is_unsigned_v<T>) {
            if (n > static_cast<T>(INT64_MAX)) {
                num_ = 0;
                big_ = ::std::make_unique<mpq_class>(::std::to_string(n));
            }
        }
    }
    rational(::std::int64_t n, ::std::int64_t d)
    {
        if (d == 0) {
            throw ::std::domain_error("rational: zero denominator");
        }
        if (d < 0) {
            *this = from_int128(-static_cast<detail::int128>(n), -static_cast<detail::int128>(d));
        } else {
            *this = from_int128(n, d);
        }
    }
    explicit rational(const mpq_class &q) : rational(from_mpq(q)) {}

    rational(const rational &o) : num_(o.num_), den_(o.den_)
    {
        if (o.big_) {
            big_ = ::std::make_unique<mpq_class>(*o.big_);
        }
    }
    rational(rational &&) noexcept = default;
    rational &operator=(const rational &o)
    {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? ::std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    rational &operator=(rational &&) noexcept = default;
    ~rational() = default;

    // Accepts "p", "p/q", optional sign and surrounding whitespace.
    static rational parse(::std::string_view s)
    {
        auto trim = [](::std::string_view v) {
            while (!v.empty() && ::std::isspace(static_cast<unsigned char>(v.front()))) {
                v.remove_prefix(1);
            }
            while (!v.empty() && ::std::isspace(static_cast<unsigned char>(v.back()))) {
                v.remove_suffix(1);
            }
            return v;
        };
        auto valid_int = [](::std::string_view v, bool allow_sign) {
            if (allow_sign && !v.empty() && (v.front() == '-' || v.front() == '+')) {
                v.remove_prefix(1);
            }
            if (v.empty()) {
                return false;
            }
            for (char c : v) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        s = trim(s);
        const auto slash = s.find('/');
        const auto num_s = trim(s.substr(0, slash));
        const auto den_s = slash == ::std::string_view::npos ? ::std::string_view("1") : trim(s.substr(slash + 1));
        if (!valid_int(num_s, true) || !valid_int(den_s, false)) {
            throw ::std::invalid_argument("invalid rational literal '" + ::std::string(s) + "'");
        }
        ::std::string ns(num_s);
        if (!ns.empty() && ns.front() == '+') {
            ns.erase(0, 1);
        }
        mpz_class n(ns), d{::std::string(den_s)};
        if (d == 0) {
            throw ::std::invalid_argument("invalid rational literal '" + ::std::string(s) + "': zero denominator");
        }
        return from_mpq(mpq_class(n, d));
    }

    bool is_small() const noexcept
    {
        return !big_;
    }
    mpq_class to_mpq() const
    {
        return big_ ? *big_ : mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    }
    mpz_class numerator() const
    {
        return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
    }
    mpz_class denominator() const
    {
        return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
    }
    // Small accessors; throw if the value does not fit.
    ::std::int64_t num() const
    {
        if (big_) {
            throw ::std::overflow_error("rational numerator does not fit in int64");
        }
        return num_;
    }
    ::std::int64_t den() const
    {
        if (big_) {
            throw ::std::overflow_error("rational denominator does not fit in int64");
        }
        return den_;
    }

    int sign() const noexcept
    {
        if (big_) {
            return sgn(*big_);
        }
        return (num_ > 0) - (num_ < 0);
    }
    bool is_zero() const noexcept
    {
        return !big_ && num_ == 0;
    }
    bool is_one() const noexcept
    {
        return !big_ && num_ == 1 && den_ == 1;
    }
    bool is_integer() const noexcept
    {
        return big_ ? big_->get_den() == 1 : den_ == 1;
    }

    long double to_long_double() const
    {
        if (!big_) {
            return static_cast<long double>(num_) / static_cast<long double>(den_);
        }
        return static_cast<long double>(big_->get_d());
    }
    double to_double() const
    {
        return static_cast<double>(to_long_double());
    }

    // Largest integer <= value.
    ::std::int64_t floor() const
    {
        if (!big_) {
            auto q = num_ / den_;
            if (num_ % den_ != 0 && num_ < 0) {
                --q;
            }
            return q;
        }
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
        if (!q.fits_slong_p()) {
            throw ::std::overflow_error("rational floor does not fit in int64");
        }
        return q.get_si();
    }

    // "p" for integers, "p/q" otherwise.
    ::std::string to_string() const
    {
        if (big_) {
            return big_->get_str();
        }
        return den_ == 1 ? ::std::to_string(num_) : ::std::to_string(num_) + "/" + ::std::to_string(den_);
    }
    // Always "p/q", as used by machine-readable formats.
    ::std::string to_fraction_string() const
    {
        if (big_) {
            return big_->get_num().get_str() + "/" + big_->get_den().get_str();
        }
        return ::std::to_string(num_) + "/" + ::std::to_string(den_);
    }

    rational operator-() const
    {
        if (!big_ && num_ != INT64_MIN) {
            rational r;
            r.num_ = -num_;
            r.den_ = den_;
            return r;
        }
        return from_mpq(-to_mpq());
    }

    friend rational operator+(const rational &a, const rational &b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                ::std::int64_t r;
                if (!__builtin_add_overflow(a.num_, b.num_, &r)) {
                    return rational(r);
                }
            }
            return from_int128(static_cast<detail::int128>(a.num_) * b.den_ + static_cast<detail::int128>(b.num_) * a.den_,
                               static_cast<detail::int128>(a.den_) * b.den_);
        }
        return from_mpq(a.to_mpq() + b.to_mpq());
    }
    friend rational operator-(const rational &a, const rational &b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                ::std::int64_t r;
                if (!__builtin_sub_overflow(a.num_, b.num_, &r)) {
                    return rational(r);
                }
            }
            return from_int128(static_cast<detail::int128>(a.num_) * b.den_ - static_cast<detail::int128>(b.num_) * a.den_,
                               static_cast<detail::int128>(a.den_) * b.den_);
        }
        return from_mpq(a.to_mpq() - b.to_mpq());
    }
    friend rational operator*(const rational &a, const rational &b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                ::std::int64_t r;
                if (!__builtin_mul_overflow(a.num_, b.num_, &r)) {
                    return rational(r);
                }
            }
            return from_int128(static_cast<detail::int128>(a.num_) * b.num_, static_cast<detail::int128>(a.den_) * b.den_);
        }
        return from_mpq(a.to_mpq() * b.to_mpq());
    }
    friend rational operator/(const rational &a, const rational &b)
    {
        if (b.is_zero()) {
            throw ::std::domain_error("rational: division by zero");
        }
        if (!a.big_ && !b.big_) {
            auto n = static_cast<detail::int128>(a.num_) * b.den_;
            auto d = static_cast<detail::int128>(a.den_) * b.num_;
            if (d < 0) {
                n = -n;
                d = -d;
            }
            return from_int128(n, d);
        }
        return from_mpq(a.to_mpq() / b.to_mpq());
    }

    rational &operator+=(const rational &b)
    {
        if (!big_ && !b.big_ && den_ == 1 && b.den_ == 1 && !__builtin_add_overflow(num_, b.num_, &num_)) {
            return *this;
        }
        return *this = *this + b;
    }
    rational &operator-=(const rational &b)
    {
        if (!big_ && !b.big_ && den_ == 1 && b.den_ == 1 && !__builtin_sub_overflow(num_, b.num_, &num_)) {
            return *this;
        }
        return *this = *this - b;
    }
    rational &operator*=(const rational &b)
    {
        return *this = *this * b;
    }
    rational &operator/=(const rational &b)
    {
        return *this = *this / b;
    }

    // this += a * b, the inner kernel of cyclotomic products.
    void add_mul(const rational &a, const rational &b)
    {
        if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
            ::std::int64_t p;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &p)) {
                num_ = p;
                return;
            }
        }
        *this += a * b;
    }

    friend bool operator==(const rational &a, const rational &b)
    {
        if (!a.big_ && !b.big_) {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
        if (a.big_ && b.big_) {
            return *a.big_ == *b.big_;
        }
        // Canonical forms: a big value never equals a small one.
        return false;
    }
    friend ::std::strong_ordering operator<=>(const rational &a, const rational &b)
    {
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_) {
                return a.num_ <=> b.num_;
            }
            const auto l = static_cast<detail::int128>(a.num_) * b.den_;
            const auto r = static_cast<detail::int128>(b.num_) * a.den_;
            return l < r ? ::std::strong_ordering::less : (l > r ? ::std::strong_ordering::greater : ::std::strong_ordering::equal);
        }
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? ::std::strong_ordering::less : (c > 0 ? ::std::strong_ordering::greater : ::std::strong_ordering::equal);
    }

    friend ::std::ostream &operator<<(::std::ostream &os, const rational &q)
    {
        return os << q.to_string();
    }
};

inline rational abs(const rational &q)
{
    return q.sign() < 0 ? -q : q;
}

inline const rational &min(const rational &a, const rational &b)
{
    return b < a ? b : a;
}

inline const rational &max(const rational &a, const rational &b)
{
    return a < b ? b : a;
}

} // namespace qtheta

#endif
