// Copyright 2026 The qtheta authors
//
// This file is part of the qtheta library.
//
// This Source Code Form is subject to the terms of the Mozilla
// Public License v. 2.0. If a copy of the MPL was not distributed
// with this file, You can obtain one at http://mozilla.org/MPL/2.0/.

#include <iostream>

#include <qtheta/cli.hpp>

int main(int argc, char **argv)
{
    return qtheta::run_cli(argc, argv, std::cout, std::cerr);
}
