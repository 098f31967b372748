// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#ifndef QTHETA_QTHETA_HPP
#define QTHETA_QTHETA_HPP

#include <qtheta/catalog.hpp>
#include <qtheta/cyclotomic.hpp>
#include <qtheta/discover.hpp>
#include <qtheta/divisor.hpp>
#include <qtheta/numeric.hpp>
#include <qtheta/puiseux.hpp>
#include <qtheta/rational.hpp>
#include <qtheta/resultant.hpp>
#include <qtheta/theta.hpp>
#include <qtheta/verify.hpp>

#endif
