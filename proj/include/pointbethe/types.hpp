// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace pointbethe {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

} // namespace pointbethe
