// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_DISCOVER_HPP
#define QTHETA_DISCOVER_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include <qtheta/catalog.hpp>
#include <qtheta/numeric.hpp>

namespace qtheta
{

struct discovered_relation {
    ::std::vector<identity_term> monomials;
    // One nullspace vector, first nonzero entry scaled to 1; empty if nullity 0.
    ::std::vector<::std::complex<double>> coefficients;
    ::std::size_t nullity = 0;
    ::std::complex<double> tau;
    ::std::vector<double> singular_values;
};

// zeta_j = (j + 0.37)/(n + 1) + 0.21 i.
inline ::std::vector<::std::complex<double>> discovery_grid(::std::size_t n)
{
    ::std::vector<::std::complex<double>> g;
    for (::std::size_t j = 0; j < n; ++j) {
        g.emplace_back((static_cast<double>(j) + 0.37) / static_cast<double>(n + 1), 0.21);
    }
    return g;
}

// Numeric nullspace of the matrix M[j][m] = monomial m at zeta_j. Rank counts
// singular values above threshold * (largest singular value).
inline discovered_relation discover_relations(const ::std::vector<identity_term> &monomials,
                                              ::std::complex<double> tau, ::std::size_t z_samples,
                                              double threshold = 1e-8, const eval_config &cfg = {})
{
    if (!(tau.imag() > 0)) {
        throw ::std::invalid_argument("discover_relations: Im(tau) must be positive");
    }
    const auto k = monomials.size();
    if (k == 0u || z_samples < k) {
        throw ::std::invalid_argument("discover_relations: need at least as many zeta samples as monomials");
    }
    discovered_relation r;
    r.tau = tau;
    for (const auto &m : monomials) {
        identity_term u = m;
        u.scalar = cyclotomic(1);
        r.monomials.push_back(::std::move(u));
    }
    const auto grid = discovery_grid(z_samples);
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(z_samples), static_cast<Eigen::Index>(k));
    for (::std::size_t j = 0; j < z_samples; ++j) {
        for (::std::size_t m = 0; m < k; ++m) {
            a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m)) = term_value<double>(r.monomials[m], grid[j], tau, cfg);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    ::std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        r.singular_values.push_back(s(i));
        if (s(i) > threshold * s(0)) {
            ++rank;
        }
    }
    r.nullity = k - rank;
    if (r.nullity > 0u) {
        const Eigen::VectorXcd v = svd.matrixV().col(static_cast<Eigen::Index>(k - 1));
        const double big = v.cwiseAbs().maxCoeff();
        Eigen::Index first = 0;
        while (::std::abs(v(first)) <= 1e-12 * big) {
            ++first;
        }
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            r.coefficients.push_back(v(i) / v(first));
        }
    }
    return r;
}

} // namespace qtheta

#endif
