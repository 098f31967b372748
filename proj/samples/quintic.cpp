// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

// Checks the quintic sum over eps' for eps = 1/5 three ways: exact series
// cancellation, numeric residuals at a few tau, and the residue sum of the
// elliptic quotient behind it.

#include <complex>
#include <iostream>

#include <qtheta/qtheta.hpp>

int main()
{
    using namespace qtheta;

    const auto quintic = identity_from_notation(
        "quintic-eps15", "T[1/5;1/5]^5 - T[1/5;3/5]^5 + T[1/5;1]^5 - T[1/5;7/5]^5 + T[1/5;9/5]^5", "sample");

    const auto exact = verify_exact(quintic, rational(8));
    std::cout << "exact to x^8: " << to_string(exact.status) << "\n";

    const auto broken = verify_exact(corrupt_identity(quintic, 1), rational(8));
    const auto &[e, c] = broken.residuals.front();
    std::cout << "with one sign flipped, lowest surviving term: (" << c.to_string() << ") x^" << e.x.to_string()
              << "\n";

    const auto numeric = verify_numeric(quintic, make_numeric_plan(7, 5, 1e-9));
    std::cout << "numeric at 5 tau: max relative residual " << *numeric.max_residual << "\n";

    const std::complex<double> tau(0.1, 1.2);
    const auto phi = quintic_quotient("eps15");
    const auto poles = phi.poles(tau);
    std::complex<double> sum = 0;
    for (std::size_t k = 0; k < poles.size(); ++k) {
        const auto r = numeric_residue<double>(phi, poles[k], tau, default_radius(phi, tau));
        std::cout << "residue " << k << ": " << r << "  closed form " << residue_closed_form(phi, k).to_string() << "\n";
        sum += r;
    }
    std::cout << "|sum of residues| = " << std::abs(sum) << "\n";
    return exact.passed() && !broken.passed() ? 0 : 1;
}
